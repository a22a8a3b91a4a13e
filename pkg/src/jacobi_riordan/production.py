"""Production matrices, A/Z sequences and what can be read off them.

For ``D = [d, h]`` the production matrix ``P = D^-1 * Dbar`` (``Dbar`` is
``D`` without its top row) has bivariate generating function
``exp(z t) (Z(t) + z A(t))`` with ``A = h'(hbar)`` and ``Z = d'(hbar)/d(hbar)``,
which means ``P[n, k] = n!/k! (Z[n-k] + k A[n-k+1])`` in raw coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import DegenerateHankel, NotTridiagonal
from .matrices import LTMatrix
from .polys import ParamPoly
from .riordan import RiordanArray
from .series import Series

__all__ = [
    "ProductionMatrix",
    "AZPair",
    "ThreeTermRecurrence",
    "production_matrix",
    "production_from_az",
    "az_from_array",
    "array_from_az",
    "rows_from_recurrence",
    "production_bivariate_check",
    "tridiagonal_to_orthopoly",
    "ogf_jfraction",
    "expand_jfraction",
]

_ZERO = ParamPoly.zero()


class ProductionMatrix(LTMatrix):
    """Lower Hessenberg: row n holds columns 0..n+1."""

    extra = 1

    def superdiagonal(self):
        return [self[n, n + 1] for n in range(self.size)]

    def off_band(self):
        """Entries strictly below the subdiagonal, as ``(n, k, value)``."""
        return [
            (n, k, c)
            for n, row in enumerate(self.rows)
            for k, c in enumerate(row[: max(n - 1, 0)])
        ]

    def is_tridiagonal(self):
        return all(not c for _, _, c in self.off_band())


@dataclass(frozen=True)
class AZPair:
    A: Series
    Z: Series

    def __post_init__(self):
        a0 = self.A[0]
        if a0.is_zero() or not a0.is_constant():
            raise ValueError(f"A(0) must be a nonzero rational, got {a0}")

    @property
    def order(self):
        return min(self.A.order, self.Z.order)


def production_matrix(array):
    """``D^-1 * Dbar`` by forward substitution, rows ``0 .. N-1``."""
    D = array.matrix
    N = array.order
    rows = []
    for n in range(N):
        inv_diag = Fraction(1) / D[n, n].constant_value()
        row = []
        for k in range(n + 2):
            acc = D[n + 1, k]
            for j in range(max(k - 1, 0), n):
                a, b = D[n, j], rows[j][k] if k < len(rows[j]) else _ZERO
                if a and b:
                    acc = acc - a * b
            row.append(acc * inv_diag)
        rows.append(row)
    return ProductionMatrix(rows)


def production_from_az(az, size=None):
    """Expand ``n! [t^n z^k] exp(z t)(Z(t) + z A(t))`` entry by entry."""
    if size is None:
        size = az.order + 1
    A, Z = az.A, az.Z
    rows = []
    for n in range(size):
        row = []
        for k in range(n + 2):
            # exp(zt) contributes (zt)^k/k! against Z and (zt)^(k-1)/(k-1)! against zA
            acc = _ZERO
            if n - k >= 0:
                acc = acc + Z[n - k] * Fraction(1, factorial(k))
            if k >= 1:
                acc = acc + A[n - k + 1] * Fraction(1, factorial(k - 1))
            row.append(acc * factorial(n))
        rows.append(row)
    return ProductionMatrix(rows)


def az_from_array(array):
    """``A = h'(hbar)``, ``Z = d'(hbar) / d(hbar)``, both of order N-1."""
    hbar = array.h.revert()
    inner = hbar.truncate(array.order - 1)
    A = array.h.derivative().compose(inner)
    Z = array.d.derivative().compose(inner) / array.d.truncate(array.order - 1).compose(inner)
    return AZPair(A, Z)


def array_from_az(A, Z=None, order=None):
    """Rebuild ``[g, f]``: ``f = Rev int dt/A``, ``g = exp((int Z/A)(f))``.

    Accepts an :class:`AZPair` or the two series.
    """
    if isinstance(A, AZPair):
        A, Z = A.A, A.Z
    if order is None:
        order = min(A.order, Z.order) + 1
    A, Z = A.truncate(order - 1), Z.truncate(order - 1)
    inv_A = 1 / A
    f = inv_A.antiderivative().revert()
    G = (Z * inv_A).antiderivative()
    return RiordanArray(G.compose(f).exp(), f, order)


def rows_from_recurrence(az, order=None):
    """Rows ``0..N`` from ``d[0,0] = 1`` and the A/Z recurrences alone.

    d[n+1, 0] = sum_i i! z_i d[n, i]
    d[n+1, k] = a_0 d[n, k-1] + 1/k! sum_{i>=k} i! (z_{i-k} + k a_{i-k+1}) d[n, i]
    """
    if order is None:
        order = az.order + 1
    a, z = az.A, az.Z
    rows = [[ParamPoly.one()]]
    for n in range(order):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            acc = a[0] * prev[k - 1] if k >= 1 else _ZERO
            inv_kfact = Fraction(1, factorial(k))
            for i in range(k, n + 1):
                if not prev[i]:
                    continue
                coeff = z[i - k] + a[i - k + 1] * k if k else z[i]
                if coeff:
                    acc = acc + coeff * prev[i] * (factorial(i) * inv_kfact)
            new.append(acc)
        rows.append(new)
    return LTMatrix(rows)


def production_bivariate_check(array):
    """``P`` from the matrices equals ``P`` expanded from ``exp(zt)(Z + zA)``."""
    P = production_matrix(array)
    return P == production_from_az(az_from_array(array), P.size)


@dataclass(frozen=True)
class ThreeTermRecurrence:
    """``a0 * P[n+1](z) = (z - alpha[n]) P[n](z) - beta[n] P[n-1](z)``.

    ``alpha[n] = P[n, n]``, ``beta[n] = P[n, n-1]`` (``beta[0] = 0``),
    ``a0`` the constant superdiagonal of the production matrix.
    """

    alpha: tuple
    beta: tuple
    a0: ParamPoly
    verified: bool = field(default=False, compare=False)

    def polynomials(self, count=None):
        """Coefficient lists (ascending in z) of ``P_0 .. P_{count-1}``."""
        if count is None:
            count = len(self.alpha) + 1
        inv = Fraction(1) / self.a0.constant_value()
        polys = [[ParamPoly.one()]]
        for n in range(count - 1):
            cur = polys[n]
            prev = polys[n - 1] if n else []
            nxt = [_ZERO] * (len(cur) + 1)
            for i, c in enumerate(cur):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - self.alpha[n] * c
            for i, c in enumerate(prev):
                nxt[i] = nxt[i] - self.beta[n] * c
            polys.append([c * inv for c in nxt])
        return polys[:count]


def tridiagonal_to_orthopoly(P, inverse_array=None):
    """Read the three-term recurrence off a tridiagonal production matrix.

    With ``inverse_array`` given, ``verified`` records whether its rows are
    the coefficient vectors of the generated polynomials.
    """
    bad = [(n, k, c) for n, k, c in P.off_band() if c]
    if bad:
        n, k, c = bad[0]
        raise NotTridiagonal(f"entry ({n}, {k}) = {c} lies outside the three bands")
    sup = set(P.superdiagonal())
    if len(sup) != 1:
        raise NotTridiagonal("superdiagonal is not constant")
    a0 = sup.pop()
    alpha = tuple(P[n, n] for n in range(P.size))
    beta = tuple(P[n, n - 1] if n else _ZERO for n in range(P.size))
    rec = ThreeTermRecurrence(alpha, beta, a0)
    if inverse_array is None:
        return rec
    rows = inverse_array.matrix.rows
    polys = rec.polynomials(min(len(rows), P.size + 1))
    ok = all(list(rows[n]) == polys[n] for n in range(len(polys)))
    return ThreeTermRecurrence(alpha, beta, a0, ok)


# -- continued fractions ------------------------------------------------------


def _reciprocal(seq):
    inv = [Fraction(1) / seq[0]]
    for n in range(1, len(seq)):
        acc = sum((seq[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
        inv.append(-acc / seq[0])
    return inv


def ogf_jfraction(seq, depth):
    """Levels ``c1..cD`` of ``1/(1 + c1 x^2/(1 + c2 x^2/(1 + ...)))``.

    ``seq`` holds the OGF coefficients, constant term 1, at least ``2*depth+1``
    of them.  Each level inverts the current tail, which must have the form
    ``1 + c x^2 (1 + ...)``.
    """
    cur = [Fraction(v) for v in seq]
    if not cur or cur[0] != 1:
        raise ValueError("sequence must start with 1")
    if len(cur) < 2 * depth + 1:
        raise ValueError(f"depth {depth} needs {2 * depth + 1} terms, got {len(cur)}")
    levels = []
    for level in range(depth):
        r = _reciprocal(cur)
        r[0] -= 1
        if not any(r):
            levels.extend([Fraction(0)] * (depth - level))
            break
        if r[1]:
            raise DegenerateHankel(f"level {level + 1}: odd term {r[1]} present")
        c = r[2]
        if not c:
            raise DegenerateHankel(f"level {level + 1}: vanishing leading coefficient")
        levels.append(c)
        cur = [v / c for v in r[2:]]
    return levels


def expand_jfraction(levels, order):
    """OGF coefficients ``0..order`` of the finite continued fraction."""
    g = Series.one(order)
    x2 = Series.monomial(2, order)
    for c in reversed(levels):
        g = 1 / (1 + x2 * g * c)
    return [c.constant_value() for c in g]
