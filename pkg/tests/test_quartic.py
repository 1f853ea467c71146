import math
from fractions import Fraction

import pytest

from cuspidal.mpoly import MPoly, ring
from cuspidal.quartic import (
    CurveError, FiberPattern, ParamCurve, biquadratic_parts, classify_real_fiber,
    critical_values, cuspidal_quartic, discriminant_poly, dual_of_dual,
    dual_parametrization, fiber_solve, flexes_and_cusps, gradient, implicitize,
    nodal_cubic, nodal_cubic_param, sheared_curve, theta,
)


def expected_quartic():
    x, y = ring("x", "y")
    return (x ** 2 + y ** 2) ** 2 + x ** 3 + 9 * x * y ** 2 + Fraction(27, 4) * y ** 2


def test_gradient_of_nodal_cubic():
    gx, gy, gz = gradient(nodal_cubic())
    x, y, z = ring("x", "y", "z")
    assert gx == -3 * x ** 2 + 2 * x * z
    assert gy == 2 * y * z
    assert gz == x ** 2 + y ** 2


def test_dual_parametrization_matches_printed_form():
    dual = dual_parametrization(nodal_cubic_param(), nodal_cubic())
    t = MPoly.variable("t", ("t",))
    assert dual.components[0] == -3 * t ** 2 - 1
    assert dual.components[1] == 2 * t
    assert dual.components[2] == (t ** 2 + 1) ** 2


def test_dual_parametrization_sample_points():
    dual = dual_parametrization(nodal_cubic_param(), nodal_cubic())
    assert dual.evaluate(Fraction(0)) == (-1, 0, 1)
    # t = 1/sqrt(3): affine point (-9/8, 3 sqrt3 / 8)
    x, y = dual.affine_point(1 / math.sqrt(3))
    assert abs(x + 9 / 8) < 1e-12
    assert abs(y - 3 * math.sqrt(3) / 8) < 1e-12


def test_dual_parametrization_validates_curve_membership():
    t = MPoly.variable("t", ("t",))
    one = MPoly.constant(1, ("t",))
    bad = ParamCurve((t, t, one))
    with pytest.raises(CurveError):
        dual_parametrization(bad, nodal_cubic())


def test_implicitize_conic():
    t = MPoly.variable("t", ("t",))
    one = MPoly.constant(1, ("t",))
    conic = implicitize(ParamCurve((t, t ** 2, one)))
    x, y = ring("x", "y")
    assert conic.equation == x * x - y  # positive-leading-grevlex normalization


def test_implicitize_dual_is_the_expected_quartic():
    curve = cuspidal_quartic()
    assert curve.equation == expected_quartic()


def test_substituting_the_parametrization_into_c_gives_zero():
    dual = dual_parametrization(nodal_cubic_param(), nodal_cubic())
    c_proj = cuspidal_quartic().homogenized()
    assignments = {v: comp for v, comp in zip(("x", "y", "z"), dual.components)}
    assert c_proj.equation.compose(assignments, ("t",)).is_zero()


def test_biquadratic_parts_and_theta():
    curve = cuspidal_quartic()
    A, B = biquadratic_parts(curve)
    x, y = ring("x", "y")
    ax = A.renamed({}).extended(("x",)) if False else A
    (x1,) = ring("x")
    assert A == 2 * x1 ** 2 + 9 * x1 + Fraction(27, 4)
    assert B == x1 ** 3 + x1 ** 4
    th = theta(curve)
    assert th == 32 * (x1 + Fraction(9, 8)) ** 3
    assert 2 * th.partial("x") == 3 * (8 * x1 + 9) ** 2
    # A(x) = 2((x + 9/4)^2 - 27/16)
    assert A == 2 * ((x1 + Fraction(9, 4)) ** 2 - Fraction(27, 16))


def test_a_sign_interval():
    curve = cuspidal_quartic()
    A, _ = biquadratic_parts(curve)
    lo = Fraction(3, 4) * (-3 - Fraction(17320508, 10 ** 7))  # just below 3/4(-3-sqrt3)
    inside = [Fraction(-3), Fraction(-2), Fraction(-1)]
    outside = [Fraction(-4), Fraction(-19, 20), Fraction(1)]
    for s in inside:
        assert A.evaluate({"x": s}) < 0
    for s in outside:
        assert A.evaluate({"x": s}) > 0


def test_fiber_solve_at_zero():
    roots = fiber_solve(cuspidal_quartic(), 0.0)
    mults = sorted(r.multiplicity for r in roots)
    assert mults == [1, 1, 2]
    assert any(r.multiplicity == 2 and abs(r.value) < 1e-14 for r in roots)
    imag = sorted(r.value.imag for r in roots if r.multiplicity == 1)
    assert abs(imag[1] - 3 * math.sqrt(3) / 2) < 1e-12


def test_fiber_solve_at_minus_nine_eighths():
    roots = fiber_solve(cuspidal_quartic(), -9 / 8)
    assert sorted(r.multiplicity for r in roots) == [2, 2]
    target = 3 * math.sqrt(3) / 8
    values = sorted(r.value.real for r in roots)
    assert abs(values[0] + target) < 1e-10 and abs(values[1] - target) < 1e-10


def test_fiber_solve_at_minus_one():
    roots = fiber_solve(cuspidal_quartic(), -1.0)
    assert sorted(r.multiplicity for r in roots) == [1, 1, 2]
    nonzero = sorted(r.value.real for r in roots if r.multiplicity == 1)
    assert abs(nonzero[0] + 0.5) < 1e-12 and abs(nonzero[1] - 0.5) < 1e-12


def test_fiber_simple_mode_rejects_critical_fibers():
    with pytest.raises(CurveError):
        fiber_solve(cuspidal_quartic(), -1.0, mode="simple")


def test_real_fiber_classification_table():
    curve = cuspidal_quartic()
    cases = [
        (0.5, FiberPattern.FOUR_IMAGINARY),
        (-0.5, FiberPattern.TWO_REAL_TWO_IMAGINARY),
        (-1.05, FiberPattern.FOUR_REAL),
        (-9 / 8, FiberPattern.TWO_DOUBLE_REAL),
        (-1.2, FiberPattern.COMPLEX_QUADRUPLE),
    ]
    for x0, expected in cases:
        assert classify_real_fiber(curve, x0).pattern is expected


def test_real_fiber_labels():
    curve = cuspidal_quartic()
    f = classify_real_fiber(curve, -0.5)
    assert f.labels["B2"] > 0 and f.labels["A2"] == -f.labels["B2"]
    assert f.labels["A1"].imag > 0 and f.labels["B1"] == f.labels["A1"].conjugate()
    g = classify_real_fiber(curve, -1.05)
    assert g.labels["B2"] > g.labels["B1"] > 0
    assert g.labels["A1"] == -g.labels["B1"] and g.labels["A2"] == -g.labels["B2"]
    h = classify_real_fiber(curve, -9 / 8)
    assert abs(h.labels["B2"] - 3 * math.sqrt(3) / 8) < 1e-10


def test_critical_values_unsheared():
    vals = critical_values(cuspidal_quartic())
    as_dict = {complex(v).real: m for v, m in vals}
    assert {round(k, 9): v for k, v in as_dict.items()} == {-1.125: 6, -1.0: 1, 0.0: 3}


def test_discriminant_factorization_oracle():
    # Disc_y = 16 B (A^2 - 4B)^2 up to a rational factor, as polynomials in x
    curve = cuspidal_quartic()
    disc = discriminant_poly(curve)
    A, B = biquadratic_parts(curve)
    oracle = (16 * B * theta(curve) ** 2).primitive()
    assert disc == oracle


def test_critical_values_sheared():
    vals = critical_values(cuspidal_quartic(), Fraction(1, 100))
    assert sorted(m for _, m in vals) == [1, 3, 3, 3]
    reals = sorted(complex(v).real for v, _ in vals)
    assert abs(reals[0] + 9 / 8 - (-0.01 * 3 * math.sqrt(3) / 8)) < 1e-6
    assert abs(reals[1] + 9 / 8 + (-0.01 * 3 * math.sqrt(3) / 8)) < 1e-6
    assert abs(reals[2] + 1) < 0.01
    assert abs(reals[3]) < 1e-9
    near_cusp_pair = [v for v, _ in vals if abs(complex(v).real + 9 / 8) < 0.05]
    assert len(near_cusp_pair) == 2


def test_sheared_curve_is_exact_substitution():
    curve = cuspidal_quartic()
    sheared = sheared_curve(curve, Fraction(1, 100))
    x, y = ring("x", "y")
    direct = curve.equation.compose({"x": x - Fraction(1, 100) * y}, ("x", "y"))
    assert sheared.equation == direct


def test_flexes_and_cusps():
    flex_params, cusps = flexes_and_cusps()
    finite = sorted(p for p in flex_params if math.isfinite(p))
    assert abs(finite[0] + 1 / math.sqrt(3)) < 1e-15
    assert abs(finite[1] - 1 / math.sqrt(3)) < 1e-15
    assert math.inf in flex_params
    assert (0.0, 0.0) in cusps
    ys = sorted(c[1] for c in cusps if c[0] != 0.0)
    assert abs(ys[0] + 3 * math.sqrt(3) / 8) < 1e-15
    assert abs(ys[1] - 3 * math.sqrt(3) / 8) < 1e-15


def test_biduality_lands_on_the_cubic():
    bidual = dual_of_dual()
    d_eq = nodal_cubic().equation
    assignments = {v: comp for v, comp in zip(("x", "y", "z"), bidual.components)}
    assert d_eq.compose(assignments, ("t",)).is_zero()


def test_pluecker_degree_of_dual_of_c_is_three():
    bidual = dual_of_dual()
    curve = implicitize(bidual)
    assert curve.degree == 3
    assert curve.equation == nodal_cubic().dehomogenized().equation.primitive() \
        or curve.equation == implicitize(nodal_cubic_param()).equation
