"""Elementary series from closed-form Taylor coefficients.

Kept free of the composition/reversion machinery so they can serve as
independent reference values for the elliptic routines.
"""
from fractions import Fraction
from math import comb, factorial

from .series import Series


def exp_series(order):
    return Series([Fraction(1, factorial(n)) for n in range(order + 1)])


def sin_series(order):
    return Series(
        [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 else 0 for n in range(order + 1)]
    )


def cos_series(order):
    return Series(
        [0 if n % 2 else Fraction((-1) ** (n // 2), factorial(n)) for n in range(order + 1)]
    )


def sinh_series(order):
    return Series([Fraction(1, factorial(n)) if n % 2 else 0 for n in range(order + 1)])


def cosh_series(order):
    return Series([0 if n % 2 else Fraction(1, factorial(n)) for n in range(order + 1)])


def tanh_series(order):
    return sinh_series(order) / cosh_series(order)


def sech_series(order):
    return 1 / cosh_series(order)


def arcsin_series(order):
    # sum C(2k,k) x^(2k+1) / (4^k (2k+1))
    c = [0] * (order + 1)
    for n in range(1, order + 1, 2):
        k = n // 2
        c[n] = Fraction(comb(2 * k, k), 4**k * n)
    return Series(c)


def arctan_series(order):
    return Series([Fraction((-1) ** (n // 2), n) if n % 2 else 0 for n in range(order + 1)])


def arctanh_series(order):
    return Series([Fraction(1, n) if n % 2 else 0 for n in range(order + 1)])


def geometric_series(order, ratio=1):
    """``1 / (1 - ratio*x)``."""
    return Series([Fraction(ratio) ** n for n in range(order + 1)])


def binomial_series(alpha, order, scale=1):
    """``(1 + scale*x)**alpha`` for rational alpha."""
    alpha = Fraction(alpha)
    c, term = [], Fraction(1)
    for n in range(order + 1):
        c.append(term * Fraction(scale) ** n)
        term = term * (alpha - n) / (n + 1)
    return Series(c)
