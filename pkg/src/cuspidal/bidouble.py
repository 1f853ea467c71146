"""Deformed bidouble covers: multiplication table, different, discriminant.

The cover is the rank-4 extension generated by z, w with z^2 = v + a w and
w^2 = u + b z over the base ring Q[u, v, a, b]; elements are written on the
module basis (1, z, w, zw).  The discriminant comes out as the norm of the
different R = 4zw - ab, and its normal forms delta_c and delta with the
three cusps at (3/4 zeta^2, 3/4 zeta) are verified exactly in Q(zeta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .mpoly import MPoly, determinant, ring

BASE_VARS = ("u", "v", "a", "b")
COVER_VARS = ("u", "v", "a", "b", "z", "w")


class StructureError(RuntimeError):
    """An identity the geometry guarantees failed to hold."""


# -- the cyclotomic field Q(zeta), zeta^2 = -1 - zeta ------------------------

class Cyclo3:
    """Elements x + y*zeta of Q(zeta) for a primitive cube root of unity."""

    __slots__ = ("x", "y")

    def __init__(self, x, y=0):
        self.x = Fraction(x)
        self.y = Fraction(y)

    @classmethod
    def zeta(cls, power=1):
        power %= 3
        if power == 0:
            return cls(1)
        if power == 1:
            return cls(0, 1)
        return cls(-1, -1)  # zeta^2 = -1 - zeta

    def _coerce(self, other):
        if isinstance(other, Cyclo3):
            return other
        return Cyclo3(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Cyclo3(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo3(-self.x, -self.y)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        # (x1 + y1 z)(x2 + y2 z) with z^2 = -1 - z
        return Cyclo3(self.x * o.x - self.y * o.y,
                      self.x * o.y + self.y * o.x - self.y * o.y)

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = Cyclo3(1)
        base = self
        n = int(n)
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def as_complex(self):
        zeta = complex(-0.5, math.sqrt(3) / 2)
        return float(self.x) + float(self.y) * zeta

    def __repr__(self):
        return f"Cyclo3({self.x}, {self.y})"


# -- cover data and the multiplication table ---------------------------------

@dataclass(frozen=True)
class CoverData:
    u: MPoly
    v: MPoly
    a: MPoly
    b: MPoly

    @classmethod
    def generic(cls):
        u, v, a, b = ring(*BASE_VARS)
        return cls(u, v, a, b)

    def __post_init__(self):
        vars_ = self.u.variables
        for f in (self.v, self.a, self.b):
            if f.variables != vars_:
                raise ValueError("cover entries over different variable lists")


@dataclass(frozen=True)
class MultTable:
    m_z: list
    m_w: list
    m_zw: list


def _basis_mul(i, j, cover):
    """Product of basis elements (1, z, w, zw), reduced to basis coordinates."""
    u, v, a, b = cover.u, cover.v, cover.a, cover.b
    vars_ = u.variables
    one = MPoly.constant(1, vars_)
    zero = MPoly.zero(vars_)

    def vec(c0=zero, cz=zero, cw=zero, czw=zero):
        return [c0, cz, cw, czw]

    # multiplication by generators on the basis, from z^2 = v + aw, w^2 = u + bz
    z_action = {
        0: vec(cz=one),                        # z*1 = z
        1: vec(c0=v, cw=a),                    # z*z = v + a w
        2: vec(czw=one),                       # z*w = zw
        3: vec(c0=a * u, cz=a * b, cw=v),      # z*zw = (v + aw)w = vw + a(u + bz)
    }
    w_action = {
        0: vec(cw=one),
        1: vec(czw=one),
        2: vec(c0=u, cz=b),                    # w*w = u + b z
        3: vec(c0=b * v, cz=u, cw=a * b),      # w*zw = z(u + bz) = uz + b(v + aw)
    }
    if i == 0:
        e = [zero] * 4
        e[j] = one
        return e
    if i == 1:
        return z_action[j]
    if i == 2:
        return w_action[j]
    # i == 3: zw * basis_j = z * (w * basis_j)
    inter = w_action[j]
    acc = [zero] * 4
    for k, coeff in enumerate(inter):
        if coeff.is_zero():
            continue
        for t in range(4):
            acc[t] = acc[t] + coeff * z_action[k][t]
    return acc


def multiplication_matrices(cover=None):
    """Matrices of multiplication by z, w, zw on the basis (1, z, w, zw).

    Column j holds the coordinates of generator * basis_j.
    """
    cover = cover or CoverData.generic()
    tables = []
    for gen in (1, 2, 3):
        cols = [_basis_mul(gen, j, cover) for j in range(4)]
        tables.append([[cols[j][i] for j in range(4)] for i in range(4)])
    return MultTable(*tables)


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(4)),
                 MPoly.zero(a[0][0].variables)) for j in range(4)] for i in range(4)]


def mat_sub(a, b):
    return [[a[i][j] - b[i][j] for j in range(4)] for i in range(4)]


def mat_scale_identity(c, vars_):
    zero = MPoly.zero(vars_)
    return [[c if i == j else zero for j in range(4)] for i in range(4)]


def different(cover=None):
    """Ramification determinant det [[2z, -a], [-b, 2w]] = 4zw - ab."""
    cover = cover or CoverData.generic()
    u, v, a, b, z, w = ring(*COVER_VARS)
    av = cover.a.extended(COVER_VARS)
    bv = cover.b.extended(COVER_VARS)
    return determinant([[2 * z, -av], [-bv, 2 * w]])


def discriminant_norm(cover=None):
    """Discriminant Delta = 4^4 det(M_zw - ab/4 I) and its normal form P.

    P(u, v, alpha, beta) = -Delta/16^2 rewritten through alpha = a^2 and
    beta = b^2; a structure error is raised if Delta ever saw an odd power
    of a or b, which would contradict the norm computation.
    """
    cover = cover or CoverData.generic()
    tables = multiplication_matrices(cover)
    vars_ = cover.u.variables
    shift = cover.a * cover.b * Fraction(1, 4)
    delta = determinant(mat_sub(tables.m_zw, mat_scale_identity(shift, vars_))) * 256
    p = _reexpress_even(delta * Fraction(-1, 256), vars_)
    return delta, p


def _reexpress_even(poly, vars_):
    """Rewrite even powers of a, b as alpha, beta (errors on odd powers)."""
    ia, ib = vars_.index("a"), vars_.index("b")
    iu, iv = vars_.index("u"), vars_.index("v")
    new_vars = ("u", "v", "alpha", "beta")
    terms = {}
    for expo, coeff in poly.terms.items():
        if expo[ia] % 2 or expo[ib] % 2:
            raise StructureError(
                f"odd power of a or b in the discriminant: exponent {expo}")
        key = (expo[iu], expo[iv], expo[ia] // 2, expo[ib] // 2)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MPoly(new_vars, terms)


# -- normal forms of the discriminant curve ----------------------------------

def delta_c(c=None):
    """One-parameter normal form delta_c(U, V) with a = 1, b = c.

    delta_c = -U^2 V^2 - 9/8 U V c^2 + c^2 V^3 + U^3 + 27/256 c^4.
    """
    if c is None:
        u, v, cc = ring("u", "v", "c")
        return (-(u ** 2) * v ** 2 - Fraction(9, 8) * u * v * cc ** 2
                + cc ** 2 * v ** 3 + u ** 3 + Fraction(27, 256) * cc ** 4)
    u, v = ring("u", "v")
    c = Fraction(c)
    return (-(u ** 2) * v ** 2 - Fraction(9, 8) * u * v * c ** 2
            + c ** 2 * v ** 3 + u ** 3 + Fraction(27, 256) * c ** 4)


def delta_normal_form():
    """delta(u, v) = P(u, v, 1, 1)."""
    _, p = discriminant_norm()
    return p.compose({"alpha": Fraction(1), "beta": Fraction(1)},
                     ("u", "v", "alpha", "beta")).dropped("alpha").dropped("beta")


def scaling_identity_residual():
    """P(lam^4 u0, lam^2 v0, 1, lam^6) - lam^12 delta(u0, v0), exactly."""
    _, p = discriminant_norm()
    target = ("u0", "v0", "lam")
    u0, v0, lam = ring(*target)
    lhs = p.compose({"u": lam ** 4 * u0, "v": lam ** 2 * v0,
                     "alpha": Fraction(1), "beta": lam ** 6}, target)
    delta = delta_normal_form()
    rhs = lam ** 12 * delta.compose({"u": u0, "v": v0}, target)
    return lhs - rhs


@dataclass(frozen=True)
class CuspPoint:
    u: Cyclo3
    v: Cyclo3
    zeta_power: int

    def as_complex(self):
        return self.u.as_complex(), self.v.as_complex()


def find_cusps(delta=None):
    """The three cusps of delta, certified exactly in Q(zeta).

    Follows the elimination u (d/du) - v (d/dv) = 3(u^3 - v^3), then
    substitutes u = zeta v and checks the leftover quadratic is exactly
    (v - 3/4 zeta)^2 up to the unit -2 zeta.
    """
    delta = delta if delta is not None else delta_normal_form()
    du = delta.partial("u")
    dv = delta.partial("v")
    u, v = (MPoly.variable(n, delta.variables) for n in ("u", "v"))
    elim = u * du - v * dv
    if elim != 3 * (u ** 3 - v ** 3):
        raise StructureError("elimination identity u d_u - v d_v = 3(u^3 - v^3) failed")
    if delta.evaluate({"u": Fraction(0), "v": Fraction(0)}) == 0:
        raise StructureError("origin unexpectedly lies on the curve")
    cusps = []
    for k in range(3):
        zeta = Cyclo3.zeta(k)
        vc = Fraction(3, 4) * zeta
        uc = Fraction(3, 4) * zeta ** 2
        # d(delta)/du at u = zeta v is v * (-2 zeta) * (v - 3/4 zeta)^2
        point = {"u": uc, "v": vc}
        residuals = [delta.evaluate(point), du.evaluate(point), dv.evaluate(point)]
        residuals = [r if isinstance(r, Cyclo3) else Cyclo3(r) for r in residuals]
        if any(not r.is_zero() for r in residuals):
            raise StructureError(f"cusp candidate zeta^{k} has nonzero residuals")
        quad = _substituted_quadratic(du, zeta)
        target = [(vc * vc), -2 * vc, Cyclo3(1)]  # (v - 3/4 zeta)^2, ascending
        unit = Cyclo3(-2) * zeta
        if [unit * t for t in target] != quad:
            raise StructureError(f"quadratic for zeta^{k} is not -2 zeta (v - 3/4 zeta)^2")
        cusps.append(CuspPoint(uc, vc, k))
    if len(cusps) != 3:
        raise StructureError("expected exactly three cusps")
    return cusps


def _substituted_quadratic(du, zeta):
    """d(delta)/du at u = zeta v, divided by v, ascending Cyclo3 coefficients."""
    by_v = {}
    iu = du.variables.index("u")
    iv = du.variables.index("v")
    for expo, coeff in du.terms.items():
        power = expo[iu] + expo[iv]
        val = coeff * zeta ** expo[iu]
        by_v[power] = by_v.get(power, Cyclo3(0)) + val
    if not by_v.get(0, Cyclo3(0)).is_zero():
        raise StructureError("substituted derivative has a constant term")
    degree = max(by_v)
    return [by_v.get(k, Cyclo3(0)) for k in range(1, degree + 1)]
