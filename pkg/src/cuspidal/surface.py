"""The twisted cubic, its net of quadrics, and the tangential developable.

Everything here is exact.  The cubic is the Veronese image
v3(t0, t1) = (t0^3, t0^2 t1, t0 t1^2, t1^3); the net of quadrics through it
is spanned by Q0 = x1 x3 - x2^2, Q1 = -x0 x3 + x1 x2, Q2 = x0 x2 - x1^2.
The determinant of the net is the square of the Veronese conic, quartics
with the cubic as double curve are quadratic expressions in the net, and
pinch points are counted by a degree-4 discriminant built from the
conormal data.  The quartic P(u, v, alpha, beta) of the deformed cover
matches the classical discriminant of binary cubics under an explicit
diagonal coordinate change, computed here and verified rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exactpoly as xp
from .bidouble import StructureError, discriminant_norm
from .linalg import nullspace, rank, solve
from .mpoly import MPoly, determinant, homogeneous_sqrt, ring

X_VARS = ("x0", "x1", "x2", "x3")
T_VARS = ("t0", "t1")
L_VARS = ("l0", "l1", "l2")


@dataclass(frozen=True)
class QuadricForm:
    """Symmetric 4x4 rational quadratic form."""
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(Fraction(e) for e in row) for row in self.matrix)
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise ValueError("need a 4x4 matrix")
        for i in range(4):
            for j in range(4):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "matrix", m)

    def form(self):
        xs = ring(*X_VARS)
        acc = MPoly.zero(X_VARS)
        for i in range(4):
            for j in range(4):
                if self.matrix[i][j]:
                    acc = acc + self.matrix[i][j] * xs[i] * xs[j]
        return acc

    def evaluate(self, point):
        return sum(self.matrix[i][j] * point[i] * point[j]
                   for i in range(4) for j in range(4))


@dataclass(frozen=True)
class ConicForm:
    """Symmetric 3x3 form; entries rational or polynomial."""
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(row) for row in self.matrix)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("need a 3x3 matrix")
        for i in range(3):
            for j in range(3):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "matrix", m)

    def value(self, y):
        return sum(self.matrix[i][j] * y[i] * y[j]
                   for i in range(3) for j in range(3))


def twisted_cubic():
    """Components of v3 as polynomials in (t0, t1)."""
    t0, t1 = ring(*T_VARS)
    return (t0 ** 3, t0 ** 2 * t1, t0 * t1 ** 2, t1 ** 3)


def v3_point(t):
    t = Fraction(t)
    return (Fraction(1), t, t * t, t ** 3)


def quadrics_through_twisted_cubic():
    """(Q0, Q1, Q2): minors of the catalecticant, vanishing on the cubic."""
    h = Fraction(1, 2)
    q0 = QuadricForm(((0, 0, 0, 0), (0, 0, 0, h), (0, 0, -1, 0), (0, h, 0, 0)))
    q1 = QuadricForm(((0, 0, 0, -h), (0, 0, h, 0), (0, h, 0, 0), (-h, 0, 0, 0)))
    q2 = QuadricForm(((0, 0, h, 0), (0, -1, 0, 0), (h, 0, 0, 0), (0, 0, 0, 0)))
    xs = ring(*X_VARS)
    assert q0.form() == xs[1] * xs[3] - xs[2] ** 2
    assert q1.form() == -xs[0] * xs[3] + xs[1] * xs[2]
    assert q2.form() == xs[0] * xs[2] - xs[1] ** 2
    return q0, q1, q2


def catalecticant():
    xs = ring(*X_VARS)
    return ((xs[0], xs[1], xs[2]), (xs[1], xs[2], xs[3]))


def quadrics_vanish_on_cubic():
    """Exact: every Q in the net pulls back to zero on v3."""
    comps = twisted_cubic()
    sub = {v: c for v, c in zip(X_VARS, comps)}
    for q in quadrics_through_twisted_cubic():
        if not q.form().compose(sub, T_VARS).is_zero():
            raise StructureError("a net quadric does not vanish on the cubic")
    return True


def net_matrix():
    """lambda . Q as a 4x4 matrix of linear forms in (l0, l1, l2)."""
    ls = ring(*L_VARS)
    qs = quadrics_through_twisted_cubic()
    zero = MPoly.zero(L_VARS)
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            acc = zero
            for l, q in zip(ls, qs):
                if q.matrix[i][j]:
                    acc = acc + q.matrix[i][j] * l
            row.append(acc)
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def net_determinant_conic():
    """det of the net: (quartic, conic with quartic = conic^2, is_square)."""
    quartic = determinant(net_matrix())
    root = homogeneous_sqrt(quartic, "l1")
    if root is None:
        raise StructureError("net determinant is not a perfect square")
    coeffs = {}
    for i, vi in enumerate(L_VARS):
        for j, vj in enumerate(L_VARS):
            expo = [0, 0, 0]
            expo[i] += 1
            expo[j] += 1
            coeffs[(i, j)] = root.coefficient(tuple(expo))
    matrix = [[coeffs[(i, j)] if i == j else coeffs[(min(i, j), max(i, j))] / 2
               for j in range(3)] for i in range(3)]
    return quartic, ConicForm(tuple(tuple(r) for r in matrix)), True


def gamma_tilde(t):
    """The cone with vertex v3(t), in net coordinates: (1, t, t^2) affinely."""
    t = Fraction(t)
    return (Fraction(1), t, t * t)


def gamma_tilde_is_the_vertex_map():
    """Exact: M(t0^2, t0 t1, t1^2) kills v3(t) identically."""
    t0, t1 = ring(*T_VARS)
    lam = (t0 * t0, t0 * t1, t1 * t1)
    comps = twisted_cubic()
    m = net_matrix()
    for i in range(4):
        acc = MPoly.zero(T_VARS)
        for j in range(4):
            entry = m[i][j].compose({"l0": lam[0], "l1": lam[1], "l2": lam[2]}, T_VARS)
            acc = acc + entry * comps[j]
        if not acc.is_zero():
            raise StructureError("gamma-tilde is not the vertex family")
    return True


def cone_vertex_check(samples=(0, 1, -1, 2, Fraction(1, 2))):
    """The rank-3 members of the net have their vertex on the cubic."""
    qs = quadrics_through_twisted_cubic()
    for t in samples:
        lam = gamma_tilde(t)
        m = [[sum(lam[k] * qs[k].matrix[i][j] for k in range(3)) for j in range(4)]
             for i in range(4)]
        kernel = nullspace(m)
        if len(kernel) != 1:
            raise StructureError(f"cone at t={t} does not have a 1-dim vertex")
        v = v3_point(t)
        if rank([kernel[0], list(v)]) != 1:
            raise StructureError(f"cone vertex at t={t} is off the cubic")
    return True


# -- conormal data -----------------------------------------------------------

_QUAD_MONOS = ((2, 0), (1, 1), (0, 2))


def _section_times_vector(section, vector_polys):
    """Dot a quadratic-component section (4x3 Fractions) with polynomial 4-vector."""
    t0, t1 = ring(*T_VARS)
    monos = [t0 * t0, t0 * t1, t1 * t1]
    acc = MPoly.zero(T_VARS)
    for comp in range(4):
        part = MPoly.zero(T_VARS)
        for k, mono in enumerate(monos):
            if section[comp][k]:
                part = part + section[comp][k] * mono
        acc = acc + part * vector_polys[comp]
    return acc


@lru_cache(maxsize=None)
def conormal_frame():
    """Two sections framing the twisted conormal bundle, exact.

    Sections are 4x3 rational matrices: component i is the quadratic
    sum_k S[i][k] m_k over m = (t0^2, t0 t1, t1^2); they annihilate both
    partial derivative vectors of v3 and stay independent for every t.
    """
    t0, t1 = ring(*T_VARS)
    d0 = (3 * t0 ** 2, 2 * t0 * t1, t1 ** 2, MPoly.zero(T_VARS))
    d1 = (MPoly.zero(T_VARS), t0 ** 2, 2 * t0 * t1, 3 * t1 ** 2)
    rows = []
    for vec in (d0, d1):
        for mono_expo in ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4)):
            row = []
            for comp in range(4):
                for qm in _QUAD_MONOS:
                    need = (mono_expo[0] - qm[0], mono_expo[1] - qm[1])
                    if min(need) < 0:
                        row.append(Fraction(0))
                    else:
                        row.append(vec[comp].coefficient(need))
            rows.append(row)
    basis = nullspace(rows)
    if len(basis) != 2:
        # quadratic-component conormal fields are H^0 of a trivial rank-2
        # bundle; any other dimension contradicts the splitting lemma
        raise StructureError(f"conormal solution space has dimension {len(basis)}")
    sections = [tuple(tuple(v[3 * c + k] for k in range(3)) for c in range(4))
                for v in basis]
    if not _frame_everywhere_independent(sections[0], sections[1]):
        raise StructureError("conormal basis degenerates at some parameter")
    return sections[0], sections[1]


def _frame_everywhere_independent(e1, e2):
    minors = []
    for a in range(4):
        for b in range(a + 1, 4):
            coeffs = [Fraction(0)] * 5
            for k1, m1 in enumerate(_QUAD_MONOS):
                for k2, m2 in enumerate(_QUAD_MONOS):
                    deg1 = m1[1] + m2[1]  # power of t1 in the quartic
                    coeffs[deg1] += e1[a][k1] * e2[b][k2] - e1[b][k1] * e2[a][k2]
            minors.append(xp.trim(coeffs))
    if all(xp.is_zero(m) for m in minors):
        return False
    g = []
    for m in minors:
        if not xp.is_zero(m):
            g = xp.gcd(g, m) if g else xp.monic(m)
    if xp.degree(g) > 0:
        return False
    # shared root at t0 = 0 means every minor misses the t1^4 coefficient
    if all(len(m) < 5 or m[4] == 0 for m in minors):
        return False
    return True


@lru_cache(maxsize=None)
def conormal_sections():
    """(a_i, b_i) linear forms with M_i v3 = a_i E1 + b_i E2, per net quadric.

    Linear forms are coefficient pairs against (t0, t1).
    """
    e1, e2 = conormal_frame()
    t0, t1 = ring(*T_VARS)
    monos = [t0 * t0, t0 * t1, t1 * t1]
    e1_polys = [sum((e1[c][k] * monos[k] for k in range(3)), MPoly.zero(T_VARS))
                for c in range(4)]
    e2_polys = [sum((e2[c][k] * monos[k] for k in range(3)), MPoly.zero(T_VARS))
                for c in range(4)]
    cubic = twisted_cubic()
    out = []
    for q in quadrics_through_twisted_cubic():
        g = [sum((q.matrix[c][d] * cubic[d] for d in range(4)), MPoly.zero(T_VARS))
             for c in range(4)]
        rows = []
        rhs = []
        for c in range(4):
            for expo in ((3, 0), (2, 1), (1, 2), (0, 3)):
                row = []
                for base in (e1_polys[c], e2_polys[c]):
                    for lin in ((1, 0), (0, 1)):
                        need = (expo[0] - lin[0], expo[1] - lin[1])
                        row.append(base.coefficient(need) if min(need) >= 0 else Fraction(0))
                rows.append(row)
                rhs.append(g[c].coefficient(expo))
        sol = solve(rows, rhs)
        if sol is None:
            raise StructureError("conormal section is not linear in the frame")
        out.append(((sol[0], sol[1]), (sol[2], sol[3])))
    return tuple(out)


def _linear_poly(pair):
    t0, t1 = ring(*T_VARS)
    return pair[0] * t0 + pair[1] * t1


def _check_conic_matrix(f):
    m = tuple(tuple(Fraction(e) for e in row) for row in f)
    if len(m) != 3 or any(len(r) != 3 for r in m):
        raise ValueError("F must be a symmetric 3x3 matrix")
    for i in range(3):
        for j in range(3):
            if m[i][j] != m[j][i]:
                raise ValueError("F must be symmetric")
    if all(e == 0 for row in m for e in row):
        raise ValueError("degenerate F: the zero matrix")
    return m


def pinch_discriminant(f):
    """Delta(F) = 4 (a.Fa)(b.Fb) - (a.Fb + b.Fa)^2 as a binary quartic.

    F is a symmetric 3x3 matrix over the net basis, both orders counted
    (F_ij Q_i Q_j summed over all i, j).  Zero iff the parameter is a
    pinch point of the quartic surface sum F_ij Q_i Q_j.
    """
    m = _check_conic_matrix(f)
    sections = conormal_sections()
    a_polys = [_linear_poly(a) for a, _ in sections]
    b_polys = [_linear_poly(b) for _, b in sections]
    zero = MPoly.zero(T_VARS)
    A = zero
    B = zero
    C = zero
    for i in range(3):
        for j in range(3):
            if m[i][j] == 0:
                continue
            A = A + m[i][j] * a_polys[i] * a_polys[j]
            B = B + m[i][j] * b_polys[i] * b_polys[j]
            C = C + m[i][j] * (a_polys[i] * b_polys[j] + b_polys[i] * a_polys[j])
    return 4 * A * B - C * C


def pinch_roots_are_simple(f):
    """Exact: the binary quartic Delta(F) has four simple projective roots.

    Dehomogenized at t0 = 1, the quartic must keep degree >= 3 (at most a
    simple root at infinity) and be squarefree.
    """
    delta = pinch_discriminant(f)
    if delta.is_zero():
        return False
    d = xp.trim([delta.coefficient((4 - k, k)) for k in range(5)])
    if xp.degree(d) < 3:
        return False  # root at infinity of multiplicity >= 2
    return xp.degree(xp.gcd(d, xp.derivative(d))) == 0


def tangency_condition(f, t):
    """Discriminant of the conic C_F restricted to the line dual to
    gamma-tilde(t); zero iff the conic is tangent there."""
    m = _check_conic_matrix(f)
    lam = gamma_tilde(t)
    pivot = max(range(3), key=lambda i: abs(lam[i]))
    others = [i for i in range(3) if i != pivot]
    k1 = [Fraction(0)] * 3
    k1[others[0]] = lam[pivot]
    k1[pivot] = -lam[others[0]]
    k2 = [Fraction(0)] * 3
    k2[others[1]] = lam[pivot]
    k2[pivot] = -lam[others[1]]

    def pair(u, v):
        return sum(m[i][j] * u[i] * v[j] for i in range(3) for j in range(3))

    return pair(k1, k2) ** 2 - pair(k1, k1) * pair(k2, k2)


@lru_cache(maxsize=None)
def tangency_matches_pinch_symbolically():
    """Exact identity: restriction discriminant = const * t1^2 * Delta(F).

    Both sides live in Q[t0, t1, l00..l22] with a generic symmetric F;
    returns the nonzero constant.
    """
    lvars = ("l00", "l01", "l02", "l11", "l12", "l22")
    big = T_VARS + lvars
    gens = {name: MPoly.variable(name, big) for name in big}

    def lam_entry(i, j):
        key = f"l{min(i, j)}{max(i, j)}"
        return gens[key]

    sections = conormal_sections()
    a_polys = [(sections[i][0][0] * gens["t0"] + sections[i][0][1] * gens["t1"])
               for i in range(3)]
    b_polys = [(sections[i][1][0] * gens["t0"] + sections[i][1][1] * gens["t1"])
               for i in range(3)]
    zero = MPoly.zero(big)
    A = zero
    B = zero
    C = zero
    for i in range(3):
        for j in range(3):
            lij = lam_entry(i, j)
            A = A + lij * a_polys[i] * a_polys[j]
            B = B + lij * b_polys[i] * b_polys[j]
            C = C + lij * (a_polys[i] * b_polys[j] + b_polys[i] * a_polys[j])
    delta = 4 * A * B - C * C

    # restriction to the dual line of (t0^2, t0 t1, t1^2), basis valid off t1=0
    k1 = (gens["t1"] ** 2, zero, -(gens["t0"] ** 2))
    k2 = (zero, gens["t1"], -gens["t0"])

    def pair(u, v):
        acc = zero
        for i in range(3):
            for j in range(3):
                if u[i].is_zero() or v[j].is_zero():
                    continue
                acc = acc + lam_entry(i, j) * u[i] * v[j]
        return acc

    tang = pair(k1, k2) ** 2 - pair(k1, k1) * pair(k2, k2)
    target = gens["t1"] ** 2 * delta
    if tang.is_zero() or target.is_zero():
        raise StructureError("degenerate tangency comparison")
    lt_t, lc_t = tang.leading_term()
    ratio = lc_t / target.coefficient(lt_t) if target.coefficient(lt_t) else None
    if ratio is None or tang != target * ratio:
        raise StructureError("tangency discriminant is not t1^2 * Delta up to scale")
    return ratio


def worked_pinch_determinant():
    """Recompute the 2x2 pinch matrix determinant of the worked coordinates.

    Basis: cones at t = (1:0), (0:1), (1:1); at the point t1 = 0 the
    evaluated sections are (1, b0), (0, 0), (1, b2).  Returns
    (det, corrected_factor) with det = (b0-b2)^2 (l00 l22 - l02^2/4); the
    printed form with l00^2 in the second factor does not match.
    """
    vars_ = ("b0", "b2", "l00", "l02", "l22")
    b0, b2, l00, l02, l22 = ring(*vars_)
    a = (MPoly.constant(1, vars_), MPoly.zero(vars_), MPoly.constant(1, vars_))
    b = (b0, MPoly.zero(vars_), b2)
    lam = {(0, 0): l00, (0, 2): l02, (2, 2): l22}
    m11 = MPoly.zero(vars_)
    m12 = MPoly.zero(vars_)
    m22 = MPoly.zero(vars_)
    for (i, j), l in lam.items():
        m11 = m11 + l * a[i] * a[j]
        m12 = m12 + l * (a[i] * b[j] + a[j] * b[i]) * Fraction(1, 2)
        m22 = m22 + l * b[i] * b[j]
    det = m11 * m22 - m12 * m12
    corrected = (b0 - b2) ** 2 * (l00 * l22 - Fraction(1, 4) * l02 ** 2)
    printed = (b0 - b2) ** 2 * (l00 * l22 - 4 * l00 ** 2)
    if det != corrected:
        raise StructureError("worked determinant does not match the corrected factor")
    if det == printed:
        raise StructureError("the printed factor unexpectedly matches")
    return det, corrected


# -- P in the net --------------------------------------------------------------

@lru_cache(maxsize=None)
def p_in_x_coordinates():
    """P(u, v, alpha, beta) moved to the cubic's coordinates.

    The diagonal identification alpha = x0, v = 3 x1, u = 12 x2,
    beta = 64 x3 matches the cuspidal-curve parametrizations
    (1, 64 s^3, 12 s^2, 3 s) and (1, s, s^2, s^3); it is verified here.
    """
    _, p = discriminant_norm()
    xs = ring(*X_VARS)
    p_x = p.compose({"u": 12 * xs[2], "v": 3 * xs[1],
                     "alpha": xs[0], "beta": 64 * xs[3]}, X_VARS)
    (s,) = ring("s")
    one = MPoly.constant(1, ("s",))
    gamma = {"x0": one, "x1": s, "x2": s * s, "x3": s ** 3}
    target = {"alpha": one, "beta": 64 * s ** 3, "u": 12 * s * s, "v": 3 * s}
    for x_name, uv_name, scale in (("x0", "alpha", 1), ("x1", "v", 3),
                                   ("x2", "u", 12), ("x3", "beta", 64)):
        if scale * gamma[x_name] != target[uv_name]:
            raise StructureError("coordinate identification failed")
    return p_x


@lru_cache(maxsize=None)
def express_p_in_quadrics():
    """Solve P = sum c_ij Q_i Q_j exactly; returns the symmetric 3x3 matrix.

    The solution is 432 (Q1^2 - 4 Q0 Q2); its conic is proportional to the
    dual conic of gamma-tilde, so Delta vanishes identically on it.
    """
    p_x = p_in_x_coordinates()
    qs = [q.form() for q in quadrics_through_twisted_cubic()]
    products = []
    keys = []
    for i in range(3):
        for j in range(i, 3):
            products.append(qs[i] * qs[j])
            keys.append((i, j))
    monomials = sorted({e for q in products for e in q.terms} | set(p_x.terms))
    rows = [[q.coefficient(e) for q in products] for e in monomials]
    rhs = [p_x.coefficient(e) for e in monomials]
    sol = solve(rows, rhs)
    if sol is None:
        raise StructureError("P is not a quadratic expression in the net")
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for c, (i, j) in zip(sol, keys):
        if i == j:
            m[i][i] = c
        else:
            m[i][j] = m[j][i] = c / 2
    check = MPoly.zero(X_VARS)
    for i in range(3):
        for j in range(3):
            if m[i][j]:
                check = check + m[i][j] * qs[i] * qs[j]
    if check != p_x:
        raise StructureError("net expression for P failed verification")
    return ConicForm(tuple(tuple(r) for r in m))


def dual_conic_of_gamma_tilde():
    """Adjugate of the Veronese conic l0 l2 - l1^2."""
    g = [[Fraction(0), Fraction(0), Fraction(1, 2)],
         [Fraction(0), Fraction(-1), Fraction(0)],
         [Fraction(1, 2), Fraction(0), Fraction(0)]]
    # adjugate of a 3x3 symmetric matrix
    adj = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            minor = (g[rows[0]][cols[0]] * g[rows[1]][cols[1]]
                     - g[rows[0]][cols[1]] * g[rows[1]][cols[0]])
            adj[j][i] = minor * (-1) ** (i + j)
    return ConicForm(tuple(tuple(r) for r in adj))


def proportional_matrices(m1, m2):
    flat1 = [e for row in m1 for e in row]
    flat2 = [e for row in m2 for e in row]
    pivot = next((k for k, e in enumerate(flat2) if e != 0), None)
    if pivot is None:
        return all(e == 0 for e in flat1)
    if flat1[pivot] == 0:
        return False
    c = flat1[pivot] / flat2[pivot]
    return all(a == c * b for a, b in zip(flat1, flat2))


# -- the developable map in cover coordinates -----------------------------------

def developable_map_checks():
    """G(s, w) = (16 s w^2, w^2 - 4 s w, s - w) lands on P; its rank-1 locus
    is w + 2s = 0 and maps onto (64 s^3, 12 s^2, 3 s)."""
    sw = ("s", "w")
    s, w = ring(*sw)
    beta = 16 * s * w * w
    u = w * w - 4 * s * w
    v = s - w
    _, p = discriminant_norm()
    pulled = p.compose({"u": u, "v": v, "alpha": Fraction(1), "beta": beta}, sw)
    if not pulled.is_zero():
        raise StructureError("G does not land on the quartic P")
    dg = [[16 * w * w, 32 * s * w],
          [-4 * w, 2 * w - 4 * s],
          [MPoly.constant(1, sw), MPoly.constant(-1, sw)]]
    minors = [dg[i][0] * dg[j][1] - dg[j][0] * dg[i][1]
              for i in range(3) for j in range(i + 1, 3)]
    (s1,) = ring("s")
    on_line = {"s": s1, "w": -2 * s1}
    for mn in minors:
        if not mn.compose(on_line, ("s",)).is_zero():
            raise StructureError("a DG minor survives on w + 2s = 0")
    off = {"s": Fraction(1), "w": Fraction(1)}
    if all(mn.evaluate(off) == 0 for mn in minors):
        raise StructureError("DG minors all vanish off the line")
    image = {name: f.compose(on_line, ("s",))
             for name, f in (("beta", beta), ("u", u), ("v", v))}
    if image["beta"] != 64 * s1 ** 3 or image["u"] != 12 * s1 * s1 or image["v"] != 3 * s1:
        raise StructureError("rank-drop image is not (64 s^3, 12 s^2, 3 s)")
    return {"on_surface": True, "rank_locus": "w + 2s = 0",
            "image": "(64 s^3, 12 s^2, 3 s)"}


def gradient_vanishing_on_cuspidal_curve():
    """All four partials of P vanish identically along Gamma."""
    _, p = discriminant_norm()
    (s,) = ring("s")
    gamma = {"u": 12 * s * s, "v": 3 * s, "alpha": MPoly.constant(1, ("s",)),
             "beta": 64 * s ** 3}
    results = {}
    for name in ("u", "v", "alpha", "beta"):
        if not p.partial(name).compose(gamma, ("s",)).is_zero():
            raise StructureError(f"dP/d{name} does not vanish on Gamma")
        results[name] = True
    if not p.compose(gamma, ("s",)).is_zero():
        raise StructureError("Gamma is not on P")
    return results


def tangent_surface_identity():
    """P vanishes identically on the tangent lines of the cubic (exact)."""
    p_x = p_in_x_coordinates()
    sh = ("s", "h")
    s, h = ring(*sh)
    point = {
        "x0": MPoly.constant(1, sh),
        "x1": s + h,
        "x2": s * s + 2 * s * h,
        "x3": s ** 3 + 3 * s * s * h,
    }
    if not p_x.compose(point, sh).is_zero():
        raise StructureError("P is not the tangent surface of the cubic")
    return True


def tangent_point(s, h):
    """Rational point v3(s) + h v3'(s) of the developable."""
    s, h = Fraction(s), Fraction(h)
    return (Fraction(1), s + h, s * s + 2 * s * h, s ** 3 + 3 * s * s * h)


def gauss_rank_at(surface_poly, point):
    """Rank of the projective second fundamental form at a smooth point.

    The Hessian restricted to the gradient's kernel descends modulo the
    Euler direction; its rank is the rank of the Gauss map differential.
    Errors out on singular points.
    """
    point = [Fraction(c) for c in point]
    values = {name: c for name, c in zip(surface_poly.variables, point)}
    grad = [surface_poly.partial(v).evaluate(values) for v in surface_poly.variables]
    if all(g == 0 for g in grad):
        raise StructureError("point is singular (gradient vanishes)")
    if surface_poly.evaluate(values) != 0:
        raise StructureError("point is not on the surface")
    n = len(point)
    hess = [[surface_poly.partial(v1).partial(v2).evaluate(values)
             for v2 in surface_poly.variables] for v1 in surface_poly.variables]
    kernel = nullspace([grad])
    gram = [[sum(w1[i] * hess[i][j] * w2[j] for i in range(n) for j in range(n))
             for w2 in kernel] for w1 in kernel]
    return rank(gram)


def veronese_bidouble_model_check(samples=((1, 2, 3), (1, 1, 1), (2, -1, 3),
                                           (5, 1, -2), (1, -4, 2))):
    """The squared-coordinates parametrization satisfies all rank-1 minors."""
    ys = ("y1", "y2", "y3")
    y1, y2, y3 = ring(*ys)
    entries = {
        (0, 0): y1 * y1, (1, 1): y2 * y2, (2, 2): y3 * y3,
        (0, 1): y1 * y2, (1, 0): y1 * y2,
        (0, 2): y1 * y3, (2, 0): y1 * y3,
        (1, 2): y2 * y3, (2, 1): y2 * y3,
    }
    for i1 in range(3):
        for i2 in range(i1 + 1, 3):
            for j1 in range(3):
                for j2 in range(j1 + 1, 3):
                    minor = (entries[(i1, j1)] * entries[(i2, j2)]
                             - entries[(i1, j2)] * entries[(i2, j1)])
                    if not minor.is_zero():
                        raise StructureError("a Veronese minor fails to vanish")
    for sample in samples:
        vals = {"y1": Fraction(sample[0]), "y2": Fraction(sample[1]),
                "y3": Fraction(sample[2])}
        m = [[entries[(i, j)].evaluate(vals) for j in range(3)] for i in range(3)]
        if rank(m) != 1:
            raise StructureError(f"Veronese matrix rank not 1 at {sample}")
    return True


def unique_conic_through(params):
    """Conics through gamma-tilde(t) for the given t's: (dimension, basis).

    Coefficient order (c00, c01, c02, c11, c12, c22) against l_i l_j,
    each unordered pair once.
    """
    params = [Fraction(t) for t in params]
    if len(set(params)) != len(params):
        raise ValueError("parameters must be distinct")
    rows = []
    for t in params:
        lam = gamma_tilde(t)
        row = []
        for i in range(3):
            for j in range(i, 3):
                row.append(lam[i] * lam[j])
        rows.append(row)
    kernel = nullspace(rows)
    return len(kernel), kernel


def unique_quartic_check(params=(0, 1, -1, 2, Fraction(1, 2))):
    """Five distinct cone points force the conic: dimension 1, spanned by
    the Veronese conic l0 l2 - l1^2."""
    if len(params) != 5:
        raise ValueError("need exactly five parameters")
    dim, kernel = unique_conic_through(params)
    if dim != 1:
        raise StructureError(f"conics through the five points form a {dim}-dim family")
    veronese = [Fraction(0), Fraction(0), Fraction(1), Fraction(-1), Fraction(0), Fraction(0)]
    if rank([kernel[0], veronese]) != 1:
        raise StructureError("the unique conic is not gamma-tilde")
    return True


def random_symmetric_matrix(rng):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            m[i][j] = m[j][i] = Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
    return tuple(tuple(r) for r in m)


def conormal_zero_property(samples=(0, 1, -1, 2, Fraction(1, 2))):
    """The cone at t* induces a conormal section vanishing simply at t*.

    Components are linear forms, so once the section vanishes at t* and is
    not identically zero, t* is its only zero and it is simple (each
    nonzero component is a scalar multiple of the linear form cutting t*).
    """
    sections = conormal_sections()
    for t in samples:
        lam = gamma_tilde(t)
        a = [sum(lam[i] * sections[i][0][k] for i in range(3)) for k in range(2)]
        b = [sum(lam[i] * sections[i][1][k] for i in range(3)) for k in range(2)]
        t = Fraction(t)
        if a == [0, 0] and b == [0, 0]:
            raise StructureError(f"cone section vanishes identically at t={t}")
        for name, lin in (("a", a), ("b", b)):
            if lin[0] * 1 + lin[1] * t != 0:
                raise StructureError(f"component {name} misses its zero at t={t}")
    return True
