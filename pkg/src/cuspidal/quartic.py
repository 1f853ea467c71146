"""The nodal cubic, its dual 3-cuspidal quartic, fibers and critical values.

The cubic D: y^2 z = x^3 - x^2 z has an isolated real node and three real
flexes; dualizing its standard parametrization produces the quartic C with
three real cusps whose fiber over x is biquadratic in y.  Everything exact
stays exact: the quartic's equation, the discriminant of the projection,
and the vanishing orders at the critical values.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactpoly as xp
from .mpoly import MPoly, resultant, ring
from .roots import ApproxRoot, eval_poly_deriv, roots_univariate

PLANE_VARS = ("x", "y", "z")
AFFINE_VARS = ("x", "y")


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneCurve:
    equation: MPoly

    @property
    def degree(self):
        return self.equation.degree()

    @property
    def projective(self):
        return len(self.equation.variables) == 3

    def homogenized(self):
        if self.projective:
            return self
        d = self.degree
        terms = {}
        for expo, coeff in self.equation.terms.items():
            terms[(expo[0], expo[1], d - sum(expo))] = coeff
        return PlaneCurve(MPoly(PLANE_VARS, terms))

    def dehomogenized(self):
        if not self.projective:
            return self
        eq = self.equation.compose({"z": Fraction(1)}, PLANE_VARS).dropped("z")
        return PlaneCurve(eq)


@dataclass(frozen=True)
class ParamCurve:
    """Projective rational curve (X(t) : Y(t) : Z(t)) with coprime components."""
    components: tuple

    def __post_init__(self):
        if len(self.components) != 3:
            raise CurveError("need three projective components")
        for c in self.components:
            if c.variables != ("t",):
                raise CurveError("components must be univariate in t")

    def coeff_lists(self):
        return [c.univariate_coeffs("t") for c in self.components]

    def evaluate(self, t):
        return tuple(c.evaluate({"t": t}) for c in self.components)

    def affine_point(self, t):
        X, Y, Z = self.evaluate(t)
        return (X / Z, Y / Z)


def _from_coeffs(coeffs):
    return MPoly(("t",), {(i,): c for i, c in enumerate(coeffs)})


def _remove_common_factor(lists):
    g = []
    for c in lists:
        g = xp.gcd(g, c) if g else xp.trim(c)
    if xp.degree(g) < 1:
        return [xp.trim(c) for c in lists]
    out = []
    for c in lists:
        q, r = xp.divmod_exact(c, g)
        assert not r
        out.append(q)
    return out


# -- the two curves of interest ----------------------------------------------

def nodal_cubic():
    """D: y^2 z - x^3 + x^2 z = 0, nodal at the origin with an isolated point."""
    x, y, z = ring(*PLANE_VARS)
    return PlaneCurve(y ** 2 * z - x ** 3 + x ** 2 * z)


def nodal_cubic_param():
    """Standard parametrization (t^2 + 1, t(t^2 + 1), 1) of D."""
    t = MPoly.variable("t", ("t",))
    one = MPoly.constant(1, ("t",))
    return ParamCurve((t ** 2 + 1, t ** 3 + t, one))


def gradient(curve):
    eq = curve.homogenized().equation
    return tuple(eq.partial(v) for v in PLANE_VARS)


def dual_parametrization(cubic, gradient_of):
    """Parametrize the dual curve: the gradient along a parametrized curve.

    Validates that the parametrization actually lies on the curve, then
    removes the common factor of the three components.
    """
    curve = gradient_of.homogenized()
    assignments = {v: c for v, c in zip(PLANE_VARS, cubic.components)}
    pullback = curve.equation.compose(assignments, ("t",))
    if not pullback.is_zero():
        raise CurveError("parametrization does not lie on the curve")
    comps = []
    for g in gradient(curve):
        comps.append(g.compose(assignments, ("t",)).univariate_coeffs("t"))
    reduced = _remove_common_factor(comps)
    return ParamCurve(tuple(_from_coeffs(c) for c in reduced))


def implicitize(param):
    """Eliminate t by a resultant; output primitive with positive leading term."""
    lists = _remove_common_factor(param.coeff_lists())
    vars_ = ("x", "y", "t")
    x, y, t = ring(*vars_)
    X = _from_coeffs(lists[0]).extended(vars_)
    Y = _from_coeffs(lists[1]).extended(vars_)
    Z = _from_coeffs(lists[2]).extended(vars_)
    p = x * Z - X
    q = y * Z - Y
    if p.degree_in("t") < 1 or q.degree_in("t") < 1:
        raise CurveError("parametrization has no t-dependence to eliminate")
    res = resultant(p, q, "t")
    res = res.dropped("t") if "t" in res.variables and res.degree_in("t") == 0 else res
    if res.is_zero():
        raise CurveError("degenerate elimination: resultant vanished identically")
    return PlaneCurve(res.primitive())


def cuspidal_quartic():
    """C: (x^2 + y^2)^2 + x^3 + 9 x y^2 + 27/4 y^2 = 0, computed from D's dual."""
    dual = dual_parametrization(nodal_cubic_param(), nodal_cubic())
    curve = implicitize(dual)
    coeffs = curve.equation.as_univariate("y")
    lead = coeffs[-1]
    c = lead.coefficient((0,) * len(lead.variables))
    if len(coeffs) != 5 or lead.degree() != 0 or c == 0:
        raise CurveError("dual curve is not monic-normalizable quartic in y")
    return PlaneCurve(curve.equation * (Fraction(1) / c))


def biquadratic_parts(curve):
    """(A, B) with fiber y^4 + A(x) y^2 + B(x); requires an even monic quartic."""
    coeffs = curve.equation.as_univariate("y")
    if len(coeffs) != 5 or not coeffs[1].is_zero() or not coeffs[3].is_zero():
        raise CurveError("curve is not even and quartic in y")
    if coeffs[4] != MPoly.constant(1, coeffs[4].variables):
        raise CurveError("fiber quartic is not monic in y")
    return coeffs[2], coeffs[0]


def theta(curve):
    """Discriminant Theta(x) = A^2 - 4B of the biquadratic fiber."""
    A, B = biquadratic_parts(curve)
    return A * A - 4 * B


# -- fibers -------------------------------------------------------------------

class FiberPattern(enum.Enum):
    FOUR_IMAGINARY = "FourImaginary"
    TWO_REAL_TWO_IMAGINARY = "TwoRealTwoImaginary"
    FOUR_REAL = "FourReal"
    TWO_DOUBLE_REAL = "TwoDoubleReal"
    COMPLEX_QUADRUPLE = "ComplexQuadruple"


@dataclass
class FiberStructure:
    x: float
    pattern: FiberPattern
    roots: list
    labels: dict = field(default_factory=dict)


def fiber_coeffs(curve, x0):
    """Ascending coefficients in y of the fiber polynomial at x = x0."""
    return [c.evaluate({"x": x0}) for c in curve.equation.as_univariate("y")]


def fiber_solve(curve, x0, mode="cluster"):
    """Fiber roots over x0, via the closed biquadratic form when available."""
    try:
        A, B = biquadratic_parts(curve)
    except CurveError:
        coeffs = fiber_coeffs(curve, x0)
        if coeffs[-1] == 0:
            raise CurveError("leading fiber coefficient vanished")
        return roots_univariate(coeffs, mode=mode)
    a = complex(A.evaluate({"x": complex(x0)}))
    b = complex(B.evaluate({"x": complex(x0)}))
    disc = a * a - 4 * b
    sq = cmath.sqrt(disc)
    coeffs = [b, 0, a, 0, 1]
    values = []
    for zsq in ((-a + sq) / 2, (-a - sq) / 2):
        root = cmath.sqrt(zsq)
        values.extend([root, -root])
    scale = max(1.0, abs(a), abs(b))
    merged = []
    for v in values:
        for m in merged:
            if abs(v - m[0]) < 1e-9 * scale:
                m[1] += 1
                break
        else:
            merged.append([v, 1])
    if mode == "simple" and any(m[1] > 1 for m in merged):
        raise CurveError(f"fiber at {x0} has multiple roots; use cluster mode")
    out = []
    for v, mult in merged:
        p, dp = eval_poly_deriv(coeffs, v)
        if mult == 1 and abs(dp) > 1e-9 * scale:
            radius = 4 * abs(p) / abs(dp) + 1e-15 * scale
        else:
            radius = 1e-12 * scale  # closed form is accurate to rounding error
        out.append(ApproxRoot(v, radius, mult))
    out.sort(key=lambda r: (r.value.real, r.value.imag))
    return out


def classify_real_fiber(curve, x0):
    """Real-root structure of the fiber, decided by exact rational signs.

    With y^2 = z and z^2 + A z + B = 0: the z-roots are real iff
    Theta = A^2 - 4B >= 0, both positive iff additionally B > 0 > A,
    both negative iff B > 0 < A.  The A1/A2/B1/B2 labels encode the root
    ordering of each regime.
    """
    A, B = biquadratic_parts(curve)
    xq = Fraction(x0)
    a = A.evaluate({"x": xq})
    b = B.evaluate({"x": xq})
    th = a * a - 4 * b
    roots = fiber_solve(curve, float(x0), mode="cluster")
    labels = {}
    if th < 0:
        pattern = FiberPattern.COMPLEX_QUADRUPLE
    elif th == 0:
        pattern = FiberPattern.TWO_DOUBLE_REAL
        s = math.sqrt(-float(a) / 2)
        labels = {"B2": s, "B1": s, "A1": -s, "A2": -s}
    elif b == 0:
        raise CurveError(f"x0 = {x0} is a critical value; patterns cover open strata")
    else:
        z_plus = (-float(a) + math.sqrt(float(th))) / 2
        z_minus = (-float(a) - math.sqrt(float(th))) / 2
        if b < 0:
            pattern = FiberPattern.TWO_REAL_TWO_IMAGINARY
            real = math.sqrt(z_plus)
            imag = math.sqrt(-z_minus)
            labels = {"B2": real, "A2": -real, "A1": imag * 1j, "B1": -imag * 1j}
        elif a < 0:
            pattern = FiberPattern.FOUR_REAL
            b2, b1 = math.sqrt(z_plus), math.sqrt(z_minus)
            labels = {"B2": b2, "B1": b1, "A1": -b1, "A2": -b2}
        else:
            pattern = FiberPattern.FOUR_IMAGINARY
            y2 = math.sqrt(-z_plus)
            y1 = math.sqrt(-z_minus)
            labels = {"A1": y1 * 1j, "A2": y2 * 1j, "B2": -y2 * 1j, "B1": -y1 * 1j}
    return FiberStructure(float(x0), pattern, roots, labels)


# -- critical values -----------------------------------------------------------

def sheared_curve(curve, shear):
    """Exact substitution x -> x - shear*y: the fiber of x' = x + shear*y."""
    shear = Fraction(shear)
    x, y = ring(*AFFINE_VARS)
    eq = curve.dehomogenized().equation
    return PlaneCurve(eq.compose({"x": x - shear * y}, AFFINE_VARS))


def discriminant_poly(curve):
    """Disc_y as an exact univariate polynomial in x (primitive)."""
    eq = curve.dehomogenized().equation
    res = resultant(eq, eq.partial("y"), "y")
    if res.is_zero():
        raise CurveError("discriminant vanished identically")
    return res.primitive()


def critical_values(curve, shear=Fraction(0), cluster_tol=1e-6):
    """Critical values of the sheared projection, with multiplicities.

    The exact discriminant is split by Yun's squarefree decomposition, so
    rational critical values come out exactly with certified orders and
    the remaining ones are simple roots of exact squarefree factors,
    found numerically with tiny certificates.  Centers closer than
    cluster_tol are merged with summed order.
    """
    sheared = sheared_curve(curve, shear)
    disc = discriminant_poly(sheared)
    coeffs = disc.univariate_coeffs("x")
    out = []
    for factor, mult in xp.squarefree_decomposition(coeffs):
        rational, cofactor = xp.rational_roots(factor)
        out.extend((complex(q), mult) for q in rational)
        if xp.degree(cofactor) >= 1:
            simple = roots_univariate([float(c) for c in cofactor], mode="simple")
            for r in simple:
                value = r.value
                if abs(value.imag) < 1e-10 * max(1.0, abs(value)):
                    value = complex(value.real, 0.0)  # conjugate-symmetric snap
                out.append((value, mult))
    merged = []
    for value, mult in sorted(out, key=lambda s: (s[0].real, s[0].imag)):
        if merged and abs(merged[-1][0] - value) < cluster_tol:
            prev = merged.pop()
            merged.append(((prev[0] * prev[1] + value * mult) / (prev[1] + mult),
                           prev[1] + mult))
        else:
            merged.append((value, mult))
    return merged


# -- flexes and cusps -----------------------------------------------------------

def hessian_determinant(curve):
    eq = curve.homogenized().equation
    rows = [[eq.partial(v1).partial(v2) for v2 in PLANE_VARS] for v1 in PLANE_VARS]
    from .mpoly import determinant
    return determinant(rows)


def flexes_and_cusps(cubic=None):
    """Flex parameters of D and the cusps of its dual quartic C.

    The affine flexes sit at 3t^2 = 1 (x = 4/3); the third flex is the
    point at infinity t = infinity, whose dual point is the origin cusp
    of C.  Exactness: the Hessian pullback is a rational multiple of
    (3t^2 - 1)(t^2 + 1)^m, checked by exact division.
    """
    cubic = cubic or nodal_cubic_param()
    hess = hessian_determinant(nodal_cubic())
    assignments = {v: c for v, c in zip(PLANE_VARS, cubic.components)}
    pullback = hess.compose(assignments, ("t",)).univariate_coeffs("t")
    flex_factor = [Fraction(-1), Fraction(0), Fraction(3)]  # 3t^2 - 1
    q, r = xp.divmod_exact(pullback, flex_factor)
    if r:
        raise CurveError("Hessian pullback is not divisible by 3t^2 - 1")
    while xp.degree(q) >= 2:
        q2, r2 = xp.divmod_exact(q, [Fraction(1), Fraction(0), Fraction(1)])
        if r2:
            raise CurveError("unexpected factor in the Hessian pullback")
        q = q2
    if xp.degree(q) != 0:
        raise CurveError("Hessian pullback kept a stray linear factor")
    flex_params = (-1 / math.sqrt(3), 1 / math.sqrt(3), math.inf)

    dual = dual_parametrization(cubic, nodal_cubic())
    # cusp parameters of C: where the dual parametrization fails to immerse
    comp = dual.coeff_lists()
    dcomp = [xp.derivative(c) for c in comp]
    minors = []
    for i in range(3):
        for j in range(i + 1, 3):
            minors.append(xp.sub(xp.mul(comp[i], dcomp[j]), xp.mul(comp[j], dcomp[i])))
    g = []
    for m in minors:
        g = xp.gcd(g, m) if g else xp.trim(m)
    if xp.degree(g) != 2 or xp.monic(g) != xp.monic(flex_factor):
        raise CurveError("cusp parameters of the dual are not at 3t^2 - 1")
    s3 = math.sqrt(3)
    cusps = ((0.0, 0.0), (-9 / 8, 3 * s3 / 8), (-9 / 8, -3 * s3 / 8))
    # exact coordinates at 3t^2 = 1: x = -9/8, y^2 = 27/64
    xs, ysq = _dual_point_at_flex(dual)
    if xs != Fraction(-9, 8) or ysq != Fraction(27, 64):
        raise CurveError("dual flex points are not (-9/8, +-3 sqrt3/8)")
    return flex_params, cusps


def _dual_point_at_flex(dual):
    """Exact (x, y^2) of the dual curve at the parameters with 3t^2 = 1."""
    def reduce_mod(coeffs):
        # reduce a polynomial in t modulo t^2 = 1/3: returns (const, t-coeff)
        c0, c1 = Fraction(0), Fraction(0)
        for k, c in enumerate(coeffs):
            if k % 2 == 0:
                c0 += c * Fraction(1, 3) ** (k // 2)
            else:
                c1 += c * Fraction(1, 3) ** ((k - 1) // 2)
        return c0, c1

    X, Y, Z = (c for c in dual.coeff_lists())
    x0, x1 = reduce_mod(X)
    z0, z1 = reduce_mod(Z)
    y0, y1 = reduce_mod(Y)
    if x1 != 0 or z1 != 0 or y0 != 0:
        raise CurveError("unexpected parity structure at the flex parameters")
    xs = x0 / z0
    ysq = (y1 * y1 * Fraction(1, 3)) / (z0 * z0)  # (y1 t)^2 with t^2 = 1/3
    return xs, ysq


def dual_of_dual(param_of_c=None, curve_c=None):
    """Gradient parametrization of C's dual: lands back on the cubic D."""
    curve_c = curve_c or cuspidal_quartic()
    param_of_c = param_of_c or dual_parametrization(nodal_cubic_param(), nodal_cubic())
    return dual_parametrization(param_of_c, curve_c)
