import cmath
import math

import pytest

from cuspidal.continuation import (
    ClearanceError, ContinuationError, check_clearance, continue_roots,
    end_permutation,
)
from cuspidal.roots import roots_univariate


def fiber_c(x):
    """Fiber quartic of the 3-cuspidal quartic: y^4 + A(x) y^2 + (x^3 + x^4)."""
    return [x ** 3 + x ** 4, 0.0, 2 * x ** 2 + 9 * x + 27 / 4, 0.0, 1.0]


def circle(center, radius, start_angle=0.0, turns=1.0, steps=24):
    return [center + radius * cmath.exp(1j * (start_angle + 2 * math.pi * turns * k / steps))
            for k in range(steps + 1)]


def test_constant_path_is_constant():
    paths = continue_roots(fiber_c, [-0.5, -0.5, -0.5])
    for p in paths:
        assert all(abs(z - p.samples[0][1]) < 1e-14 for _, z in p.samples)


def test_real_strands_become_real_past_tangency():
    # detour counterclockwise around the tangency at x = -1 (its critical value)
    detour = [-1 + 0.02 * cmath.exp(1j * t * math.pi / 8) for t in range(9)]
    path = [-0.5, -0.98] + detour + [-1.05]
    start = roots_univariate(fiber_c(-0.5), mode="simple")
    paths = continue_roots(fiber_c, path, initial=start)
    start_real = sorted(abs(r.value.imag) < 1e-12 for r in start)
    assert start_real == [False, False, True, True]
    for p in paths:
        assert abs(p.samples[-1][1].imag) < 1e-9  # four real roots at -1.05


def test_straight_path_through_critical_value_fails():
    with pytest.raises(ContinuationError):
        continue_roots(fiber_c, [-0.5, -1.05])


def test_clearance_precondition():
    with pytest.raises(ClearanceError):
        check_clearance([-0.5, -1.05], [-1.0], 0.01)
    check_clearance([-0.5 + 0.5j, -1.05 + 0.5j], [-1.0], 0.01)


def test_loop_around_origin_swaps_colliding_strands():
    start = roots_univariate(fiber_c(-0.5), mode="simple")
    loop = circle(0.0, 0.5, start_angle=math.pi, steps=48)
    paths = continue_roots(fiber_c, loop, initial=start)
    perm = end_permutation(paths, start)
    real_idx = [i for i, r in enumerate(start) if abs(r.value.imag) < 1e-12]
    imag_idx = [i for i, r in enumerate(start) if abs(r.value.imag) >= 1e-12]
    assert sorted((real_idx[0], perm[real_idx[0]])) == sorted(real_idx)
    assert perm[real_idx[0]] == real_idx[1] and perm[real_idx[1]] == real_idx[0]
    for i in imag_idx:
        assert perm[i] == i


def test_loop_then_reverse_is_identity():
    start = roots_univariate(fiber_c(-0.5), mode="simple")
    loop = circle(0.0, 0.5, start_angle=math.pi, steps=48)
    both = loop + loop[::-1]
    paths = continue_roots(fiber_c, both, initial=start)
    perm = end_permutation(paths, start)
    assert perm == list(range(4))


def test_reversed_loop_inverts_permutation():
    start = roots_univariate(fiber_c(-0.5), mode="simple")
    loop = circle(0.0, 0.5, start_angle=math.pi, steps=48)
    perm_f = end_permutation(continue_roots(fiber_c, loop, initial=start), start)
    perm_b = end_permutation(continue_roots(fiber_c, loop[::-1], initial=start), start)
    composed = [perm_b[perm_f[i]] for i in range(4)]
    assert composed == list(range(4))


def test_fiber_symmetry_under_conjugation_and_negation():
    for x in (-0.5, 0.7, -1.06):
        roots = roots_univariate(fiber_c(x), mode="cluster")
        vals = [r.value for r in roots for _ in range(r.multiplicity)]
        for v in vals:
            assert min(abs(v.conjugate() - w) for w in vals) < 1e-9
            assert min(abs(-v - w) for w in vals) < 1e-9
