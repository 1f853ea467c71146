"""Braid monodromy of a plane curve by continuation around critical values.

Loops run along the real axis from the basepoint, take a counterclockwise
semicircular detour above every intermediate critical value, circle the
target counterclockwise, and come back.  They are emitted in the
counterclockwise cyclic order of their departure directions: targets left
of the basepoint farthest first, then targets to the right nearest first.

The strand sweep orders the fiber by real part (ties and tangencies broken
by rotating the fiber plane by multiples of pi/17) and emits one signed
Artin letter per transversal exchange of neighbors; a counterclockwise
exchange, the strand coming from the right passing above, is positive.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .braids import BraidWord, free_reduce
from .continuation import check_clearance, continue_roots, end_permutation
from .quartic import (classify_real_fiber, critical_values, cuspidal_quartic,
                      fiber_coeffs, sheared_curve)
from .roots import roots_univariate

DEFAULT_SHEAR = Fraction(1, 100)


def default_basepoint():
    """x0 = 3/4 (sqrt 3 - 3), between the tangency and the origin cusp."""
    return 0.75 * (math.sqrt(3) - 3)


class SweepError(RuntimeError):
    pass


class _Ambiguous(Exception):
    pass


@dataclass
class LoopSpec:
    target: complex
    multiplicity: int
    waypoints: list


@dataclass
class MonodromyResult:
    n_strands: int
    factors: list
    loops: list
    basepoint: float
    shear: Fraction
    strand_names: list
    start_roots: list
    strand_paths: list = field(default_factory=list)

    def exponent_sums(self):
        return [f.exponent_sum() for f in self.factors]

    def to_json(self):
        return {
            "n": self.n_strands,
            "basepoint": self.basepoint,
            "shear": f"{self.shear.numerator}/{self.shear.denominator}",
            "critical_values": [[loop.target.real, loop.target.imag]
                                for loop in self.loops],
            "orders": [loop.multiplicity for loop in self.loops],
            "strand_names": list(self.strand_names),
            "factors": [f.to_json() for f in self.factors],
        }


def _axis_walk(x_from, x_to, obstacles, r_detour, detour_steps):
    """Real-axis walk with counterclockwise semicircle detours above obstacles."""
    direction = 1.0 if x_to > x_from else -1.0
    lo, hi = min(x_from, x_to), max(x_from, x_to)
    between = sorted((o for o in obstacles if lo + 1e-12 < o < hi - 1e-12),
                     reverse=direction < 0)
    pts = [complex(x_from)]
    for o in between:
        entry = o + direction * r_detour * (-1.0)
        pts.append(complex(entry))
        # counterclockwise half-turn: from the approach side over the top
        start = 0.0 if direction < 0 else math.pi
        for k in range(1, detour_steps + 1):
            ang = start + math.pi * k / detour_steps
            pts.append(o + r_detour * cmath.exp(1j * ang))
    pts.append(complex(x_to))
    return pts


def build_loops(criticals, basepoint, circle_radius=None, circle_steps=32,
                detour_steps=8):
    """Loop waypoint lists in counterclockwise cyclic order: left targets
    farthest first, then right targets nearest first."""
    reals = []
    for value, mult in criticals:
        value = complex(value)
        if abs(value.imag) > 1e-9:
            raise SweepError(f"critical value {value} is not real; "
                             "loop construction expects the real configuration")
        reals.append((value.real, mult))
    values = [v for v, _ in reals]
    gaps = [abs(a - b) for i, a in enumerate(values) for b in values[i + 1:]]
    dmin = min(gaps + [min(abs(basepoint - v) for v in values)])
    r = circle_radius if circle_radius is not None else dmin / 4
    r_detour = min(2 * r, dmin / 3)
    left = sorted((v, m) for v, m in reals if v < basepoint)
    right = sorted((v, m) for v, m in reals if v > basepoint)
    loops = []
    for v, m in left + right:
        side = 1.0 if basepoint > v else -1.0
        approach = v + side * r
        obstacles = [w for w in values if w != v]
        walk = _axis_walk(basepoint, approach, obstacles, r_detour, detour_steps)
        start_angle = 0.0 if side > 0 else math.pi
        circle = [v + r * cmath.exp(1j * (start_angle + 2 * math.pi * k / circle_steps))
                  for k in range(1, circle_steps + 1)]
        waypoints = walk + circle + list(reversed(walk))
        loops.append(LoopSpec(complex(v), m, waypoints))
    return loops, r


def _decompose_adjacent_swaps(order, new_order):
    """Indices i where order swaps (i, i+1); raises if not disjoint swaps."""
    n = len(order)
    swaps = []
    i = 0
    while i < n:
        if new_order[i] == order[i]:
            i += 1
        elif (i + 1 < n and new_order[i] == order[i + 1]
              and new_order[i + 1] == order[i]):
            swaps.append(i)
            i += 2
        else:
            raise _Ambiguous("order change is not a product of disjoint adjacent swaps")
    return swaps


def _sweep(paths, rotation):
    n = len(paths)
    m = len(paths[0].samples)
    scale = max(abs(z) for p in paths for _, z in p.samples) or 1.0
    tol = 1e-11 * scale

    def positions(step):
        return [rotation * paths[k].samples[step][1] for k in range(n)]

    def sort_order(pos):
        return sorted(range(n), key=lambda k: (pos[k].real, pos[k].imag))

    prev = positions(0)
    order = sort_order(prev)
    letters = []
    for step in range(1, m):
        cur = positions(step)
        new_order = sort_order(cur)
        if new_order != order:
            for i in _decompose_adjacent_swaps(order, new_order):
                a, b = order[i], order[i + 1]  # b on the right before the swap
                f0 = prev[b].real - prev[a].real
                f1 = cur[b].real - cur[a].real
                if f0 <= 0 or f1 >= 0:
                    raise _Ambiguous("non-transversal crossing")
                t = f0 / (f0 - f1)
                g = (1 - t) * (prev[b].imag - prev[a].imag) + t * (cur[b].imag - cur[a].imag)
                if abs(g) < tol:
                    raise _Ambiguous("crossing too close to a true collision")
                letters.append((i + 1) if g > 0 else -(i + 1))
            order = new_order
        prev = cur
    return letters


def braid_from_strand_paths(paths, max_rotations=16):
    """Sweep a family of sampled strand paths into a braid word.

    The fiber plane is rotated by k pi/17 until every crossing is a clean
    transversal exchange of neighbors; ambiguity after the retry budget is
    a hard error.
    """
    n = len(paths)
    if n < 2:
        raise SweepError("need at least two strands")
    times = [t for t, _ in paths[0].samples]
    for p in paths[1:]:
        if [t for t, _ in p.samples] != times:
            raise SweepError("strand paths are not sampled at common parameters")
    last = None
    for attempt in range(max_rotations + 1):
        rotation = cmath.exp(1j * math.pi * attempt / 17)
        try:
            letters = _sweep(paths, rotation)
            return BraidWord(n, free_reduce(tuple(letters)))
        except _Ambiguous as exc:
            last = exc
    raise SweepError(f"sweep stayed ambiguous after {max_rotations} rotations: {last}")


def _strand_names(curve, basepoint, start_roots):
    """Match the basepoint fiber against the unsheared curve's A/B labels."""
    try:
        labels = classify_real_fiber(curve, basepoint).labels
    except Exception:
        return [f"s{k + 1}" for k in range(len(start_roots))]
    names = []
    for r in start_roots:
        best = min(labels.items(), key=lambda kv: abs(kv[1] - r.value))
        names.append(best[0])
    if len(set(names)) != len(names):
        return [f"s{k + 1}" for k in range(len(start_roots))]
    return names


def monodromy_factorization(curve=None, basepoint=None, shear=DEFAULT_SHEAR,
                            circle_steps=32, keep_paths=False):
    """The braid monodromy factorization of the curve, one factor per loop.

    Factors appear in the counterclockwise cyclic order starting with the
    loops farthest to the left of the basepoint; for the 3-cuspidal quartic
    with a small shear that is the two split cusp values near -9/8, then
    the tangency near -1, then the origin cusp.
    """
    curve = curve or cuspidal_quartic()
    basepoint = default_basepoint() if basepoint is None else float(basepoint)
    shear = Fraction(shear)
    criticals = critical_values(curve, shear)
    loops, radius = build_loops(criticals, basepoint, circle_steps=circle_steps)
    sheared = sheared_curve(curve, shear)
    ycoeffs = sheared.equation.as_univariate("y")

    def fiber(x):
        return [c.evaluate({"x": complex(x)}) for c in ycoeffs]

    start_roots = roots_univariate(fiber(basepoint), mode="simple")
    names = _strand_names(curve, basepoint, start_roots)
    factors = []
    all_paths = []
    for loop in loops:
        others = [l.target for l in loops if l is not loop]
        check_clearance(loop.waypoints, others, 0.9 * min(radius, 1.0))
        paths = continue_roots(fiber, loop.waypoints, initial=start_roots)
        end_permutation(paths, start_roots)  # loudly validates the loop closed
        factors.append(braid_from_strand_paths(paths))
        if keep_paths:
            all_paths.append(paths)
    return MonodromyResult(
        n_strands=len(start_roots), factors=factors, loops=loops,
        basepoint=basepoint, shear=shear, strand_names=names,
        start_roots=start_roots, strand_paths=all_paths)


def connecting_braid(curve, from_basepoint, to_basepoint, shear=DEFAULT_SHEAR,
                     via=None):
    """Braid of dragging the basepoint along a given waypoint path."""
    sheared = sheared_curve(curve, Fraction(shear))
    ycoeffs = sheared.equation.as_univariate("y")

    def fiber(x):
        return [c.evaluate({"x": complex(x)}) for c in ycoeffs]

    start_roots = roots_univariate(fiber(from_basepoint), mode="simple")
    waypoints = via if via is not None else [from_basepoint, to_basepoint]
    paths = continue_roots(fiber, waypoints, initial=start_roots)
    return braid_from_strand_paths(paths)


def strand_paths_svg(paths, width=640, height=480):
    """Non-normative SVG plot of strand paths in the fiber plane."""
    xs = [z.real for p in paths for _, z in p.samples]
    ys = [z.imag for p in paths for _, z in p.samples]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-9)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad

    def to_px(z):
        px = (z.real - x0) / (x1 - x0) * width
        py = height - (z.imag - y0) / (y1 - y0) * height
        return f"{px:.2f},{py:.2f}"

    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"]
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
    lines.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    for k, p in enumerate(paths):
        pts = " ".join(to_px(z) for _, z in p.samples)
        color = colors[k % len(colors)]
        lines.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     f'stroke-width="1.2"/>')
        start = to_px(p.samples[0][1]).split(",")
        lines.append(f'<circle cx="{start[0]}" cy="{start[1]}" r="3" fill="{color}"/>')
    lines.append("</svg>")
    return "\n".join(lines)
