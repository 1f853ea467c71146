import random
from fractions import Fraction

import pytest

from cuspidal.bidouble import StructureError
from cuspidal.linalg import rank
from cuspidal.mpoly import MPoly, ring
from cuspidal.surface import (
    ConicForm, QuadricForm, cone_vertex_check, conormal_sections,
    conormal_zero_property, developable_map_checks, dual_conic_of_gamma_tilde,
    express_p_in_quadrics, gamma_tilde, gamma_tilde_is_the_vertex_map,
    gauss_rank_at, gradient_vanishing_on_cuspidal_curve, net_determinant_conic,
    p_in_x_coordinates, pinch_discriminant, pinch_roots_are_simple,
    proportional_matrices, quadrics_through_twisted_cubic,
    quadrics_vanish_on_cubic, random_symmetric_matrix, tangency_condition,
    tangency_matches_pinch_symbolically, tangent_point,
    tangent_surface_identity, twisted_cubic, unique_conic_through,
    unique_quartic_check, v3_point, veronese_bidouble_model_check,
    worked_pinch_determinant,
)


def test_quadrics_vanish_on_cubic():
    assert quadrics_vanish_on_cubic()


def test_q1_point_values():
    q0, q1, q2 = quadrics_through_twisted_cubic()
    assert q1.evaluate((1, 1, 1, 1)) == 0
    assert q1.evaluate((1, 0, 0, 1)) == -1
    assert q0.evaluate(v3_point(Fraction(2, 3))) == 0


def test_catalecticant_rank_one_on_cubic():
    for t in (0, 1, -1, Fraction(2, 5), 3):
        p = v3_point(t)
        m = [[p[0], p[1], p[2]], [p[1], p[2], p[3]]]
        assert rank(m) == 1


def test_net_determinant_is_a_square():
    quartic, conic, is_square = net_determinant_conic()
    assert is_square
    l0, l1, l2 = ring("l0", "l1", "l2")
    assert quartic == Fraction(1, 16) * (l0 * l2 - l1 * l1) ** 2
    # the conic is the Veronese conic up to scale
    veronese = ((0, 0, Fraction(1, 2)), (0, -1, 0), (Fraction(1, 2), 0, 0))
    assert proportional_matrices(conic.matrix, veronese)


def test_determinant_values_on_axes():
    quartic, _, _ = net_determinant_conic()
    assert quartic.evaluate({"l0": 1, "l1": 0, "l2": 0}) == 0  # Q0 is a cone
    assert quartic.evaluate({"l0": 0, "l1": 1, "l2": 0}) == Fraction(1, 16)


def test_gamma_tilde_vertex_family():
    assert gamma_tilde_is_the_vertex_map()
    assert cone_vertex_check()


def test_developable_map_checks():
    report = developable_map_checks()
    assert report["rank_locus"] == "w + 2s = 0"


def test_gradient_vanishes_on_gamma():
    assert gradient_vanishing_on_cuspidal_curve() == {
        "u": True, "v": True, "alpha": True, "beta": True}


def test_p_is_tangent_surface():
    assert tangent_surface_identity()


def test_p_expressed_in_quadrics():
    conic = express_p_in_quadrics()
    # P = 432 (Q1^2 - 4 Q0 Q2) in the verified coordinates
    expected = ((0, 0, -864), (0, 432, 0), (-864, 0, 0))
    assert conic.matrix == tuple(tuple(map(Fraction, r)) for r in expected)
    assert proportional_matrices(conic.matrix, dual_conic_of_gamma_tilde().matrix)


def test_pinch_discriminant_vanishes_for_squares():
    f = ((1, 0, 0), (0, 0, 0), (0, 0, 0))  # F = Q0^2
    assert pinch_discriminant(f).is_zero()


def test_pinch_discriminant_vanishes_for_the_developable():
    conic = express_p_in_quadrics()
    assert pinch_discriminant(conic.matrix).is_zero()


def test_pinch_discriminant_rejects_zero_matrix():
    with pytest.raises(ValueError):
        pinch_discriminant(((0, 0, 0), (0, 0, 0), (0, 0, 0)))


def test_random_surfaces_have_four_simple_pinch_points():
    rng = random.Random(2026)
    hits = 0
    for _ in range(5):
        f = random_symmetric_matrix(rng)
        if pinch_roots_are_simple(f):
            hits += 1
    assert hits == 5


def test_conormal_zero_property():
    assert conormal_zero_property()


def test_tangency_condition_on_the_developable():
    conic = express_p_in_quadrics()
    for t in (0, 1, -1, Fraction(3, 7), 5):
        assert tangency_condition(conic.matrix, t) == 0


def test_tangency_condition_generic_nonzero():
    f = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    vals = [tangency_condition(f, t) for t in (0, 1, 2, Fraction(1, 3))]
    assert any(v != 0 for v in vals)


def test_tangency_matches_pinch():
    c = tangency_matches_pinch_symbolically()
    assert c != 0
    # spot check: vanishing loci agree at rational parameters
    rng = random.Random(7)
    for _ in range(5):
        f = random_symmetric_matrix(rng)
        delta = pinch_discriminant(f)
        for t in (1, -2, Fraction(2, 3)):
            dval = delta.evaluate({"t0": Fraction(1), "t1": Fraction(t)})
            tval = tangency_condition(f, t)
            assert (dval == 0) == (tval == 0)


def test_worked_pinch_determinant_corrects_the_factor():
    det, corrected = worked_pinch_determinant()
    b0, b2, l00, l02, l22 = ring("b0", "b2", "l00", "l02", "l22")
    assert det == (b0 - b2) ** 2 * (l00 * l22 - Fraction(1, 4) * l02 ** 2)


def test_unique_conic_through_five_points():
    assert unique_quartic_check()


def test_four_points_leave_a_pencil():
    dim, _ = unique_conic_through((0, 1, -1, 2))
    assert dim == 2


def test_duplicate_parameters_rejected():
    with pytest.raises(ValueError):
        unique_quartic_check((0, 1, 1, 2, 3))


def test_gauss_rank_on_the_developable():
    p_x = p_in_x_coordinates()
    rng = random.Random(11)
    for _ in range(5):
        s = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
        h = Fraction(rng.randrange(1, 5), rng.randrange(1, 4))
        assert gauss_rank_at(p_x, tangent_point(s, h)) == 1


def test_gauss_rank_controls():
    x0, x1, x2, x3 = ring("x0", "x1", "x2", "x3")
    quadric = x0 * x3 - x1 * x2
    assert gauss_rank_at(quadric, (1, 1, 1, 1)) == 2
    plane = x0
    assert gauss_rank_at(plane, (0, 1, 0, 0)) == 0
    with pytest.raises(StructureError):
        gauss_rank_at(p_in_x_coordinates(), v3_point(2))  # on the cuspidal edge


def test_veronese_bidouble_model():
    assert veronese_bidouble_model_check()
