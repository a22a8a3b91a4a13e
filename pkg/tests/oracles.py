"""Reference computations for the tests, written on top of sympy.

Nothing here calls into the package except to convert values at the
boundary, so every expected value is produced by an independent route.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

import sympy as sp

from jacobi_riordan.polys import ParamPoly
from jacobi_riordan.series import Series

m, x = sp.symbols("m x")


def to_fraction(value):
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_poly(expr):
    expr = sp.expand(expr)
    if expr == 0:
        return ParamPoly()
    coeffs = sp.Poly(expr, m).all_coeffs()[::-1]
    return ParamPoly([to_fraction(c) for c in coeffs])


def to_series(coeffs):
    return Series([to_poly(c) for c in coeffs])


def from_series(series):
    return [sum(sp.Rational(c.numerator, c.denominator) * m**i for i, c in enumerate(p.coeffs))
            for p in series]


def taylor(expr, order, var=x):
    """Raw Taylor coefficients 0..order of a sympy expression."""
    ser = sp.series(expr, var, 0, order + 1).removeO()
    ser = sp.expand(ser)
    return [sp.expand(ser.coeff(var, n)) for n in range(order + 1)]


def mul(a, b):
    n = min(len(a), len(b))
    return [sp.expand(sum(a[i] * b[k - i] for i in range(k + 1))) for k in range(n)]


def power(a, k):
    out = [sp.Integer(1)] + [sp.Integer(0)] * (len(a) - 1)
    for _ in range(k):
        out = mul(out, a)
    return out


def compose(f, g):
    """Sum of f[k] g^k, term by term."""
    n = min(len(f), len(g))
    out = [sp.Integer(0)] * n
    gk = [sp.Integer(1)] + [sp.Integer(0)] * (n - 1)
    for k in range(n):
        out = [sp.expand(o + f[k] * c) for o, c in zip(out, gk)]
        gk = mul(gk, g[:n])
    return out


def revert(h):
    """Solve h(b) = x one coefficient at a time by brute force."""
    n = len(h)
    b = [sp.Integer(0)] * n
    b[1] = 1 / h[1]
    for k in range(2, n):
        unknown = sp.Symbol("u")
        trial = b[:k] + [unknown] + [sp.Integer(0)] * (n - k - 1)
        eq = compose(h, trial)[k]
        b[k] = sp.expand(sp.solve(eq, unknown)[0])
    return b


def integrate(a):
    return [sp.Integer(0)] + [sp.expand(c / (i + 1)) for i, c in enumerate(a[:-1])]


def derivative(a):
    return [sp.expand(c * i) for i, c in enumerate(a)][1:]


@lru_cache(maxsize=None)
def jacobi(order):
    """(sn, cn, dn) coefficient lists via reversion of the elliptic integral."""
    integrand = taylor(1 / sp.sqrt((1 - x**2) * (1 - m * x**2)), order)
    arcsn = integrate(integrand)
    sn = revert(arcsn)
    sn2 = mul(sn, sn)
    cn = taylor(sp.sqrt(1 - sum(c * x**i for i, c in enumerate(sn2))), order)
    dn = taylor(sp.sqrt(1 - m * sum(c * x**i for i, c in enumerate(sn2))), order)
    return tuple(sn), tuple(cn), tuple(dn)


def generic_elements(d, h, order):
    """n!/k! [x^n] d h^k, straight from the definition."""
    rows = []
    for n in range(order + 1):
        row = []
        for k in range(n + 1):
            col = mul(list(d), power(list(h), k))
            row.append(sp.expand(col[n] * sp.factorial(n) / sp.factorial(k)))
        rows.append(row)
    return rows


def rows_to_polys(rows):
    return [[to_poly(c) for c in row] for row in rows]


def expand_continued_fraction(levels, order):
    """OGF coefficients of 1/(1 + c1 x^2/(1 + c2 x^2/...)) via sympy."""
    expr = sp.Integer(1)
    for c in reversed(levels):
        expr = 1 / (1 + sp.Rational(c.numerator, c.denominator) * x**2 * expr)
    return [to_fraction(c) for c in taylor(expr, order)]


def egf(coeffs):
    return [sp.expand(c * factorial(n)) for n, c in enumerate(coeffs)]
