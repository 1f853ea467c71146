"""Root continuation along paths in the base of a parametrized fiber polynomial.

The predictor is the previous position, the corrector a short Newton run on
the new fiber; a step is accepted only when every corrected move stays below
a third of the current minimum pairwise strand separation, so strand
identities can never be confused.  Rejected steps are halved, 40 times at
most, then the failure is reported loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import RootFindingError, eval_poly_deriv, roots_univariate


class ContinuationError(RuntimeError):
    pass


class ClearanceError(ContinuationError):
    """The requested path runs too close to a critical value."""


def _segment_point_distance(a, b, p):
    if a == b:
        return abs(p - a)
    ab = b - a
    t = ((p - a) * ab.conjugate()).real / (abs(ab) ** 2)
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


def check_clearance(path, critical_values, clearance):
    for a, b in zip(path, path[1:]):
        for c in critical_values:
            d = _segment_point_distance(complex(a), complex(b), complex(c))
            if d < clearance:
                raise ClearanceError(
                    f"path segment {a:.6g} -> {b:.6g} passes within "
                    f"{d:.3g} of critical value {c:.6g} (clearance {clearance:.3g})")


@dataclass
class StrandPath:
    strand_id: int
    samples: list  # (parameter in [0,1], complex position)

    def position(self, k):
        return self.samples[k][1]


def _newton_track(coeffs, z, tol=5e-13, iterations=24):
    """Newton iteration returning (converged, new position)."""
    scale = max(1.0, abs(z))
    for _ in range(iterations):
        p, dp = eval_poly_deriv(coeffs, z)
        if dp == 0:
            return False, z
        step = p / dp
        z = z - step
        if abs(step) < tol * scale:
            return True, z
    return False, z


def _min_pairwise(points):
    best = None
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = abs(points[i] - points[j])
            if best is None or d < best:
                best = d
    return best if best is not None else float("inf")


def continue_roots(fiber_coeffs, path, initial=None, halving_budget=40,
                   avoid=None, clearance=0.0):
    """Track all simple fiber roots along a piecewise-linear path of x values.

    fiber_coeffs(x) must return the ascending coefficient list of the fiber
    polynomial at x.  Returns one StrandPath per root; strand k starts at the
    k-th initial root.  The final samples sit at parameter 1.  When ``avoid``
    lists critical values, the path is required to clear them by ``clearance``.
    """
    if len(path) < 1:
        raise ValueError("empty path")
    if avoid:
        check_clearance(path, avoid, clearance)
    if initial is None:
        initial = roots_univariate(fiber_coeffs(path[0]), mode="simple")
    positions = [complex(r.value) for r in initial]
    n = len(positions)
    if n < 1:
        raise ContinuationError("no roots to continue")
    lengths = [abs(b - a) for a, b in zip(path, path[1:])]
    total = sum(lengths) or 1.0
    paths = [StrandPath(k, [(0.0, positions[k])]) for k in range(n)]

    done = 0.0
    for seg, (xa, xb) in enumerate(zip(path, path[1:])):
        if xa == xb:
            continue

        def advance(x_from, x_to, pos, depth):
            coeffs = fiber_coeffs(x_to)
            sep = _min_pairwise(pos)
            new = []
            ok = True
            for z in pos:
                conv, z2 = _newton_track(coeffs, z)
                if not conv or abs(z2 - z) >= sep / 3.0:
                    ok = False
                    break
                new.append(z2)
            if ok:
                return [(x_to, new)]
            if depth >= halving_budget:
                raise ContinuationError(
                    f"step from {x_from:.6g} to {x_to:.6g} kept failing after "
                    f"{halving_budget} halvings")
            mid = (x_from + x_to) / 2
            first = advance(x_from, mid, pos, depth + 1)
            second = advance(mid, x_to, first[-1][1], depth + 1)
            return first + second

        accepted = advance(xa, xb, positions, 0)
        seg_len = lengths[seg]
        for x_here, pos in accepted:
            frac = abs(x_here - xa) / seg_len if seg_len else 1.0
            t = (done + frac * seg_len) / total
            for k in range(n):
                paths[k].samples.append((t, pos[k]))
        positions = accepted[-1][1]
        done += seg_len
    for k in range(n):
        t_last, z_last = paths[k].samples[-1]
        if t_last != 1.0:
            paths[k].samples.append((1.0, z_last))
    return paths


def end_permutation(paths, reference):
    """Match final strand positions against reference roots by nearest disk.

    Returns perm with perm[k] = index of the reference root where strand k
    ends.  Errors out if the matching is ambiguous or not a bijection.
    """
    perm = []
    for p in paths:
        z = p.samples[-1][1]
        dists = sorted((abs(z - complex(r.value)), i) for i, r in enumerate(reference))
        if len(dists) > 1 and dists[0][0] > 0.45 * dists[1][0]:
            raise ContinuationError(
                f"ambiguous end matching for strand {p.strand_id}")
        perm.append(dists[0][1])
    if sorted(perm) != list(range(len(reference))):
        raise ContinuationError("end fiber does not match reference roots")
    return perm
