import cmath
import math
from fractions import Fraction

import pytest

from cuspidal.braids import (
    BraidWord, braid_equal, compose_permutations, conjugate_power_witness,
    cycle_notation, is_transposition, permutation_image,
)
from cuspidal.continuation import StrandPath
from cuspidal.groups import (
    abelianization, add_projective_relation, todd_coxeter, van_kampen,
)
from cuspidal.monodromy import (
    SweepError, braid_from_strand_paths, build_loops, connecting_braid,
    default_basepoint, monodromy_factorization, strand_paths_svg,
)
from cuspidal.quartic import critical_values, cuspidal_quartic

import functools


@functools.lru_cache(maxsize=None)
def factorization():
    return monodromy_factorization(keep_paths=True)


def _synthetic_paths(fn_list, steps=64):
    times = [k / steps for k in range(steps + 1)]
    return [StrandPath(i, [(t, fn(t)) for t in times]) for i, fn in enumerate(fn_list)]


def test_sweep_constant_paths_is_empty():
    paths = _synthetic_paths([lambda t: -1 + 0j, lambda t: 1 + 0j])
    assert braid_from_strand_paths(paths).letters == ()


def test_sweep_counterclockwise_halfturn_is_positive_generator():
    paths = _synthetic_paths([
        lambda t: -cmath.exp(1j * math.pi * t),
        lambda t: cmath.exp(1j * math.pi * t),
    ])
    assert braid_from_strand_paths(paths).letters == (1,)


def test_sweep_clockwise_halfturn_is_negative_generator():
    paths = _synthetic_paths([
        lambda t: -cmath.exp(-1j * math.pi * t),
        lambda t: cmath.exp(-1j * math.pi * t),
    ])
    assert braid_from_strand_paths(paths).letters == (-1,)


def test_sweep_full_twist():
    paths = _synthetic_paths([
        lambda t: -cmath.exp(1j * 2 * math.pi * t),
        lambda t: cmath.exp(1j * 2 * math.pi * t),
    ], steps=128)
    assert braid_from_strand_paths(paths).letters == (1, 1)


def test_loop_order_and_multiplicities():
    crit = critical_values(cuspidal_quartic(), Fraction(1, 100))
    loops, radius = build_loops(crit, default_basepoint())
    targets = [loop.target.real for loop in loops]
    assert targets == sorted(targets[:3]) + [targets[3]]
    assert abs(targets[0] + 9 / 8 + 0.01 * 3 * math.sqrt(3) / 8) < 1e-6
    assert abs(targets[1] + 9 / 8 - 0.01 * 3 * math.sqrt(3) / 8) < 1e-6
    assert abs(targets[2] + 1) < 0.01
    assert abs(targets[3]) < 1e-12
    assert [loop.multiplicity for loop in loops] == [3, 3, 1, 3]


def test_factorization_exponent_sums():
    result = factorization()
    assert result.exponent_sums() == [3, 3, 1, 3]
    assert sum(result.exponent_sums()) == 10  # total discriminant order
    # the local braid exponent matches the discriminant order at each value
    assert result.exponent_sums() == [loop.multiplicity for loop in result.loops]


def test_factors_are_conjugates_of_generator_powers():
    result = factorization()
    powers = []
    for f in result.factors:
        witness = conjugate_power_witness(f)
        assert witness is not None, f.letters
        powers.append(witness[0])
    assert powers == [3, 3, 1, 3] or powers == [-3, -3, -1, -3]


def test_factor_permutations():
    result = factorization()
    perms = [permutation_image(f) for f in result.factors]
    for p in perms:
        assert is_transposition(p)
    prod = compose_permutations(perms, 4)
    # conjugate to (1,3)(2,4): a fixed-point-free double transposition
    assert sorted(prod) == [0, 1, 2, 3]
    assert all(prod[i] != i for i in range(4))
    assert all(prod[prod[i]] == i for i in range(4))


def test_strand_names_cover_the_four_labels():
    result = factorization()
    assert sorted(result.strand_names) == ["A1", "A2", "B1", "B2"]


def test_first_two_factors_commute():
    result = factorization()
    f1, f2 = result.factors[0], result.factors[1]
    assert braid_equal(f1 * f2, f2 * f1)


def test_group_fingerprints_from_numeric_factorization():
    result = factorization()
    p = van_kampen(result.factors, 4)
    assert abelianization(p) == [0]
    proj = add_projective_relation(p)
    assert abelianization(proj) == [4]
    assert todd_coxeter(proj, max_cosets=10000) == 12


def test_basepoint_drag_conjugates_each_factor():
    result = factorization()
    new_bp = 0.3
    # drag to the right passing above x = 0 (the clockwise half-turn)
    r = 0.05
    upper = [r * cmath.exp(1j * math.pi * (1 - k / 8)) for k in range(9)]
    via = [result.basepoint, -r] + upper[1:] + [new_bp]
    drag = connecting_braid(cuspidal_quartic(), result.basepoint, new_bp, via=via)
    moved = monodromy_factorization(basepoint=new_bp)
    assert moved.exponent_sums() == [3, 3, 1, 3]
    for f_old, f_new in zip(result.factors, moved.factors):
        cand = drag.inverse() * f_old * drag
        assert braid_equal(f_new, cand)


def test_svg_output():
    result = factorization()
    svg = strand_paths_svg(result.strand_paths[0])
    assert svg.startswith("<svg") and "polyline" in svg
