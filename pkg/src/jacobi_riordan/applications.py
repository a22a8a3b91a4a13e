"""Traveling-wave applications: KdV cnoidal waves and a transmission-line voltage.

A traveling wave ``u(x, t) = U(x - c t)`` turns ``u_t +- 6 u u_x + u_xxx = 0``
into the ODE residual ``-c U' +- 6 U U' + U'''`` in ``xi = x - c t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSolution, OrderTooLow, ZeroNormalizer
from .elliptic import jacobi_series
from .matrices import LTMatrix
from .polys import ParamPoly, as_poly
from .riordan import RiordanArray
from .series import Series

__all__ = [
    "TravelingWaveAnsatz",
    "CnoidalParams",
    "TlineParams",
    "TlineSlice",
    "kdv_residual",
    "cnoidal_solve",
    "cn2_array",
    "tline_quartic_solve",
    "tline_voltage",
    "tline_riordan_elements",
    "parse_sign",
]


def parse_sign(sign):
    """``+1`` / ``-1`` from ``'plus'``, ``'minus'``, ``'+'``, ``'-'`` or an int."""
    if sign in (1, "plus", "+"):
        return 1
    if sign in (-1, "minus", "-"):
        return -1
    raise ValueError(f"sign must be plus or minus, got {sign!r}")


@dataclass(frozen=True)
class TravelingWaveAnsatz:
    profile: Series
    speed: object
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "sign", parse_sign(self.sign))
        object.__setattr__(self, "speed", as_poly(self.speed))


def kdv_residual(wave):
    """``-c u' + sign*6 u u' + u'''``; three orders are lost to u'''."""
    u = wave.profile
    if u.order < 4:
        raise OrderTooLow(f"profile order {u.order} < 4")
    du = u.derivative()
    d3u = du.derivative().derivative()
    n = d3u.order
    du, u = du.truncate(n), u.truncate(n)
    return du.scale(-wave.speed) + (u * du).scale(6 * wave.sign) + d3u


@dataclass(frozen=True)
class CnoidalParams:
    """``u(xi) = a + b cn(xi, m)^2`` traveling at speed ``c``."""

    a: ParamPoly
    b: ParamPoly
    c: ParamPoly
    m: Fraction | None
    sign: int

    def profile(self, order):
        cn = jacobi_series(self.m, order).cn
        return Series.constant(self.a, order) + (cn * cn).scale(self.b)

    def ansatz(self, order):
        return TravelingWaveAnsatz(self.profile(order), self.c, self.sign)


def cnoidal_solve(m=None, sign=-1, order=12, a=0):
    """Constants making ``a + b cn^2`` a traveling KdV wave.

    With ``y = cn^2`` the residual is
    ``b [(-c + 6 s a) y' + 6 s b y y' + y''']``; the two combinations
    ``lam = -c + 6 s a`` and ``mu = 6 s b`` are fixed by the lowest two
    nonvanishing orders and the rest of the series is checked.  ``a`` is a
    free choice (the level of the wave); ``c`` follows from it.
    """
    if order < 8:
        raise OrderTooLow(f"order {order} < 8")
    s = parse_sign(sign)
    cn = jacobi_series(m, order).cn
    y = cn * cn
    dy = y.derivative()
    d3y = dy.derivative().derivative()
    n = d3y.order
    dy, yy = dy.truncate(n), (y.truncate(n) * dy.truncate(n))
    # lam*dy + mu*yy + d3y == 0, coefficients at xi^1 and xi^3
    (p1, q1, r1), (p3, q3, r3) = [(dy[j], yy[j], d3y[j]) for j in (1, 3)]
    det = p1 * q3 - q1 * p3
    if det.is_zero() or not det.is_constant():
        raise NoSolution(f"coefficient system has non-invertible determinant {det}")
    lam = (q1 * r3 - r1 * q3) / det
    mu = (r1 * p3 - p1 * r3) / det
    if (dy.scale(lam) + yy.scale(mu) + d3y) != Series.zero(n):
        raise NoSolution("higher-order residual coefficients do not vanish")
    b = mu * Fraction(1, 6 * s)
    if b.is_zero():
        raise NoSolution("only the constant solution b = 0 exists for this m")
    a = as_poly(a)
    c = a * (6 * s) - lam
    return CnoidalParams(a, b, c, m, s)


def cn2_array(m=None, order=10):
    """``[cn^2, int_0^xi cn^2]``."""
    if order < 9:
        raise OrderTooLow(f"order {order} < 9")
    cn = jacobi_series(m, order).cn
    sq = cn * cn
    return RiordanArray(sq, sq.truncate(order - 1).antiderivative(), order)


def tline_quartic_solve(m=None, order=8):
    """``(a, b, c)`` with ``(sn')^2 = a + b sn^2 + c sn^4`` through ``order``.

    In the basis 1, sn^2, sn^4 the system is unit lower triangular in the
    coefficients of xi^0, xi^2, xi^4, so the solution is unique.
    """
    if order < 6:
        raise OrderTooLow(f"order {order} < 6")
    t = jacobi_series(m, order)
    lhs = t.sn.derivative() ** 2
    n = lhs.order
    s2 = (t.sn * t.sn).truncate(n)
    s4 = s2 * s2
    basis = [Series.one(n), s2, s4]
    sol = []
    for j, deg in enumerate((0, 2, 4)):
        acc = lhs[deg]
        for i, coeff in enumerate(sol):
            acc = acc - coeff * basis[i][deg]
        sol.append(acc / basis[j][deg])
    a, b, c = sol
    if lhs != Series.constant(a, n) + s2.scale(b) + s4.scale(c):
        raise NoSolution("(sn')^2 is not a quartic in sn to this order")
    return a, b, c


@dataclass(frozen=True)
class TlineParams:
    """Voltage constants ``g0, g_1..g_{N+1}`` and ``f_1..f_{N+1}``.

    ``g`` holds ``g0..g_{N+1}`` (so ``g[i]`` is ``g_i``); ``f`` holds
    ``f_1..f_{N+1}`` (so ``f[j]`` is ``f_{j+1}``).
    """

    g: tuple
    f: tuple
    m: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(Fraction(v) for v in self.g))
        object.__setattr__(self, "f", tuple(Fraction(v) for v in self.f))
        if len(self.g) != len(self.f) + 1:
            raise ValueError("need len(g) == len(f) + 1 (g0..g_{N+1}, f_1..f_{N+1})")

    @property
    def N(self):
        return len(self.f) - 1


def _tline_parts(m, order):
    sn = jacobi_series(m, order).sn
    sq = sn * sn
    h = sn / (1 + sq)
    q = (1 - sq) / (1 + sq)
    return h, q


def tline_voltage(params, order=10):
    """``g0 + sum_{j=0}^{N} h^j (g_{j+1} h + f_{j+1} q)`` with
    ``h = sn/(1+sn^2)``, ``q = (1-sn^2)/(1+sn^2)``."""
    h, q = _tline_parts(params.m, order)
    total = Series.constant(params.g[0], order)
    hj = Series.one(order)
    for j in range(params.N + 1):
        total = total + hj * (h.scale(params.g[j + 1]) + q.scale(params.f[j]))
        hj = hj * h
    return total


@dataclass(frozen=True)
class TlineSlice:
    """Per-slice data for a fixed summation index ``j``.

    ``table[n, k] = n!/k! [xi^n] dhat h^k`` with ``dhat = d_j / f_{j+1}``;
    ``term`` is the slice's contribution ``f_{j+1} dhat h^j`` to V and
    ``term_from_table`` rebuilds it from column j of the table.
    ``literal_form`` is ``g0 + f_{j+1} sum_i table[N, i] xi^i``, the
    expression obtained by moving the j-dependent constant outside the sum.
    """

    j: int
    normalizer: Fraction
    array: RiordanArray
    table: LTMatrix
    term: Series
    term_from_table: Series
    literal_form: Series

    @property
    def consistent(self):
        return self.term == self.term_from_table


def tline_riordan_elements(params, j, order=10):
    """Generic-element table for the normalized ``j``-th slice of V."""
    if not 0 <= j <= params.N:
        raise ValueError(f"slice index {j} outside 0..{params.N}")
    fj = params.f[j]
    if not fj:
        raise ZeroNormalizer(f"f_{j + 1} = 0 cannot normalize slice {j}")
    h, q = _tline_parts(params.m, order)
    dhat = q + h.scale(params.g[j + 1] / fj)
    array = RiordanArray(dhat, h, order)
    table = array.matrix
    term = (dhat * h**j).scale(fj)
    jfact = Fraction(1)
    for i in range(2, j + 1):
        jfact *= i
    from_table = [ParamPoly.zero()] * (order + 1)
    nfact = Fraction(1)
    for n in range(order + 1):
        if n:
            nfact *= n
        if n >= j:
            from_table[n] = table[n, j] * (fj * jfact / nfact)
    row = table[order]
    literal = Series.constant(params.g[0], order) + Series(
        [row[i] * fj for i in range(len(row))], order
    )
    return TlineSlice(j, fj, array, table, term, Series(from_table), literal)
