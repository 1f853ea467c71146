"""Univariate complex root finding with a posteriori certification.

Simultaneous Aberth-Ehrlich iteration seeded on a perturbed circle,
followed by a Newton polish.  Each root carries the inclusion radius
deg * |p(z)/p'(z)| (the smallest root distance of p from z is bounded by
this, by the partial-fraction identity p'/p = sum 1/(z - r_i)).

Coefficient lists are ascending: p(z) = c[0] + c[1] z + ... + c[d] z^d.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class RootFindingError(RuntimeError):
    """Iteration did not converge within its budget."""


@dataclass(frozen=True)
class ApproxRoot:
    value: complex
    radius: float
    multiplicity: int = 1

    def overlaps(self, other, inflation=1.0):
        return abs(self.value - other.value) <= inflation * (self.radius + other.radius)


def eval_poly(coeffs, z):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def eval_poly_deriv(coeffs, z):
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def newton_polish(coeffs, z, iterations=5):
    for _ in range(iterations):
        p, dp = eval_poly_deriv(coeffs, z)
        if dp == 0:
            break
        step = p / dp
        z = z - step
        if abs(step) < 1e-16 * (1.0 + abs(z)):
            break
    return z


def _cauchy_radius(coeffs):
    lead = abs(coeffs[-1])
    return 1.0 + max(abs(c) for c in coeffs[:-1]) / lead if len(coeffs) > 1 else 1.0


def _aberth(coeffs, tol=1e-13, max_iter=200):
    n = len(coeffs) - 1
    radius = _cauchy_radius(coeffs)
    z = [radius * cmath.exp(2j * math.pi * (k + 0.25) / n + 0.41j / n)
         for k in range(n)]
    scale = max(1.0, max(abs(c) for c in coeffs))
    for _ in range(max_iter):
        worst = 0.0
        for i in range(n):
            p, dp = eval_poly_deriv(coeffs, z[i])
            if p == 0:
                continue
            s = sum(1.0 / (z[i] - z[j]) for j in range(n) if j != i)
            denom = dp - p * s
            if denom == 0:
                z[i] += (0.01 + 0.007j) * (1.0 + abs(z[i]))
                worst = math.inf
                continue
            step = p / denom
            z[i] -= step
            worst = max(worst, abs(step) / (1.0 + abs(z[i])))
        if worst < tol:
            return z
    # near multiple roots the simultaneous iteration stalls at cluster size;
    # accept if residuals are tiny, otherwise report failure loudly
    if all(abs(eval_poly(coeffs, zi)) < 1e-8 * scale for zi in z):
        return z
    raise RootFindingError(f"Aberth iteration did not converge in {max_iter} steps")


def _eval_error_bound(coeffs, z):
    """First-order bound on the Horner evaluation error of p at z."""
    az = abs(z)
    s = 0.0
    for c in reversed(coeffs):
        s = s * az + abs(c)
    return 4.0 * len(coeffs) * 2.220446049250313e-16 * s


def _certified_radius(coeffs, z):
    """Inclusion radius deg * (|p| + eval error) / |p'|; inf when p' drowns."""
    n = len(coeffs) - 1
    p, dp = eval_poly_deriv(coeffs, z)
    num = abs(p) + _eval_error_bound(coeffs, z)
    deriv_err = _eval_error_bound([i * c for i, c in enumerate(coeffs)][1:], z)
    if abs(dp) <= 10.0 * deriv_err:
        return math.inf
    r = n * num / abs(dp)
    return r if math.isfinite(r) else math.inf


def _merge_clusters(roots, inflation=2.0):
    """Union-find merge of roots whose inflated disks overlap."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if roots[i].overlaps(roots[j], inflation):
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    merged = []
    for members in groups.values():
        total = sum(m.multiplicity for m in members)
        center = sum(m.value * m.multiplicity for m in members) / total
        radius = max(abs(m.value - center) + m.radius for m in members)
        merged.append(ApproxRoot(center, radius, total))
    merged.sort(key=lambda r: (r.value.real, r.value.imag))
    return merged


def roots_univariate(coeffs, mode="simple", tol=1e-13, max_iter=200):
    """All complex roots of an ascending coefficient list, with certified radii.

    'simple' requires pairwise disjoint inclusion disks and multiplicity 1
    everywhere; 'cluster' merges overlapping disks (inflated by 2) into
    multiple roots.  Exact zero roots are peeled off symbolically first.
    """
    coeffs = [complex(c) for c in coeffs]
    if not coeffs or coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if len(coeffs) == 1:
        raise ValueError("degree must be at least 1")
    zero_mult = 0
    while coeffs[0] == 0:
        zero_mult += 1
        coeffs = coeffs[1:]
    found = []
    if len(coeffs) > 1:
        if len(coeffs) == 2:
            approx = [-coeffs[0] / coeffs[1]]
        else:
            approx = _aberth(coeffs, tol=tol, max_iter=max_iter)
        approx = [newton_polish(coeffs, z) for z in approx]
        radii = [_certified_radius(coeffs, z) for z in approx]
        for i, r in enumerate(radii):
            if math.isinf(r):
                # z sits on a critical point to machine precision: a multiple
                # root; cover the cluster partner instead of everything
                others = [abs(approx[i] - approx[j]) for j in range(len(approx)) if j != i]
                radii[i] = 2.0 * min(others) if others else 0.0
        found = [ApproxRoot(z, r, 1) for z, r in zip(approx, radii)]
    if zero_mult:
        if mode == "simple" and zero_mult > 1:
            raise RootFindingError("multiple root at 0 in simple mode")
        found.extend(ApproxRoot(0j, 0.0, 1) for _ in range(zero_mult))
    if mode == "simple":
        for i in range(len(found)):
            for j in range(i + 1, len(found)):
                if found[i].overlaps(found[j]):
                    raise RootFindingError(
                        f"roots {found[i].value:.6g} and {found[j].value:.6g} "
                        "have overlapping certificates in simple mode")
        return sorted(found, key=lambda r: (r.value.real, r.value.imag))
    return _merge_clusters(found)
