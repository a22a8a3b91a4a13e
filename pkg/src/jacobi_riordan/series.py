"""Truncated formal power series with coefficients in Q[m].

Coefficients are raw Taylor coefficients: ``s[n]`` is the coefficient of
``x**n``.  A series of order ``N`` knows ``s[0..N]`` exactly and nothing
beyond; binary operations propagate the smaller order.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational

from .errors import BadLinearTerm, DomainError, NonzeroInnerConstant
from .polys import ParamPoly, as_poly

__all__ = [
    "Series",
    "series_add",
    "series_mul",
    "series_compose",
    "series_revert",
    "series_pow",
    "series_analytic",
]

_ZERO = ParamPoly.zero()
_ONE = ParamPoly.one()


def _unit_constant(p, what):
    """Return p as a nonzero Fraction or raise DomainError."""
    if not p.is_constant() or p.is_zero():
        raise DomainError(f"{what}: constant term must be a nonzero rational, got {p}")
    return p.constant_value()


class Series:
    """Immutable truncated power series ``sum(c[n] x^n, n <= order)``.

    >>> x = Series.x(5)
    >>> str((1 + x) * (1 - x))
    '0: 1\\n2: -1'
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs, order=None):
        c = [as_poly(v) for v in coeffs]
        if any(v is NotImplemented for v in c):
            raise TypeError("series coefficients must be numbers or ParamPoly")
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(c) <= order:
            c.extend([_ZERO] * (order + 1 - len(c)))
        self._c = tuple(c[: order + 1])

    @classmethod
    def _wrap(cls, coeffs):
        obj = cls.__new__(cls)
        obj._c = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, order):
        return cls._wrap([_ZERO] * (order + 1))

    @classmethod
    def one(cls, order):
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c, order):
        return cls._wrap([as_poly(c)] + [_ZERO] * order)

    @classmethod
    def x(cls, order):
        """The identity series ``x``."""
        c = [_ZERO] * (order + 1)
        if order >= 1:
            c[1] = _ONE
        return cls._wrap(c)

    @classmethod
    def monomial(cls, n, order, coeff=1):
        c = [_ZERO] * (order + 1)
        if n <= order:
            c[n] = as_poly(coeff)
        return cls._wrap(c)

    @classmethod
    def from_egf(cls, values, order=None):
        """Build from EGF-normalized values ``n! * a_n``."""
        return cls(
            [as_poly(v) * Fraction(1, factorial(n)) for n, v in enumerate(values)], order
        )

    # -- inspection ---------------------------------------------------------

    @property
    def order(self):
        return len(self._c) - 1

    @property
    def coeffs(self):
        return self._c

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._c[n]
        if n < 0 or n >= len(self._c):
            raise IndexError(f"coefficient {n} outside order {self.order}")
        return self._c[n]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def egf(self):
        """EGF-normalized view ``[n! * a_n]``."""
        return [c * factorial(n) for n, c in enumerate(self._c)]

    def valuation(self):
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    def is_even(self):
        return all(not c for c in self._c[1::2])

    def is_odd(self):
        return all(not c for c in self._c[0::2])

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series._wrap(self._c[: order + 1])

    def subs_m(self, value):
        """Specialize the parameter m in every coefficient."""
        return Series._wrap([c.subs(value) for c in self._c])

    def agrees(self, other, order=None):
        """Coefficientwise equality up to ``order`` (default: common order)."""
        if order is None:
            order = min(self.order, other.order)
        if order > self.order or order > other.order:
            return False
        return self._c[: order + 1] == other._c[: order + 1]

    def __eq__(self, other):
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Rational, ParamPoly)):
            return Series.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(len(self._c), len(other._c))
        return Series._wrap([a + b for a, b in zip(self._c[:n], other._c[:n])])

    __radd__ = __add__

    def __neg__(self):
        return Series._wrap([-a for a in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_poly(c)
        return Series._wrap([a * c for a in self._c])

    def __mul__(self, other):
        if isinstance(other, (int, Rational, ParamPoly)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._c), len(other._c))
        a, b = self._c, other._c
        out = [_ZERO] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Series._wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, ParamPoly):
            return self.scale(Fraction(1) / _unit_constant(other, "division"))
        if not isinstance(other, Series):
            return NotImplemented
        return _divide(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _divide(other, self)

    def __pow__(self, k):
        return self.power(k)

    def power(self, k):
        """``self**k`` for integer k (negative needs a unit constant term),
        or rational k when the constant term is 1."""
        if isinstance(k, int):
            if k < 0:
                return _divide(Series.one(self.order), self.power(-k))
            out, base = Series.one(self.order), self
            while k:
                if k & 1:
                    out = out * base
                k >>= 1
                if k:
                    base = base * base
            return out
        return _rational_power(self, Fraction(k))

    # -- calculus -----------------------------------------------------------

    def derivative(self):
        """d/dx; the order drops by one."""
        if self.order == 0:
            raise DomainError("derivative of an order-0 series carries no information")
        return Series._wrap([self._c[n] * n for n in range(1, len(self._c))])

    def antiderivative(self):
        """Integral from 0; the order rises by one."""
        out = [_ZERO]
        for n, c in enumerate(self._c):
            out.append(c * Fraction(1, n + 1) if c else _ZERO)
        return Series._wrap(out)

    def shift_down(self):
        """``self / x`` for a series with zero constant term; order drops by one."""
        if self._c[0]:
            raise DomainError("shift_down needs a zero constant term")
        return Series._wrap(self._c[1:])

    def shift_up(self):
        """``x * self``; order rises by one."""
        return Series._wrap((_ZERO,) + self._c)

    # -- analytic -----------------------------------------------------------

    def sqrt(self):
        return _sqrt(self)

    def exp(self):
        return _exp(self)

    def log(self):
        return _log(self)

    def compose(self, inner):
        return series_compose(self, inner)

    __call__ = compose

    def revert(self):
        return series_revert(self)

    # -- text ---------------------------------------------------------------

    def to_text(self, egf=False, show_zero=False):
        values = self.egf() if egf else self._c
        lines = [f"{n}: {c}" for n, c in enumerate(values) if show_zero or c]
        return "\n".join(lines) if lines else "0: 0"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        body = ", ".join(f"'{c}'" for c in self._c)
        return f"Series([{body}])"


# -- algorithms ---------------------------------------------------------------


def _divide(num, den):
    n = min(len(num._c), len(den._c))
    inv = Fraction(1) / _unit_constant(den._c[0], "division")
    a, b = num._c, den._c
    q = []
    for k in range(n):
        acc = a[k]
        for j in range(1, k + 1):
            bj = b[j]
            if bj and q[k - j]:
                acc = acc - bj * q[k - j]
        q.append(acc * inv)
    return Series._wrap(q)


def _sqrt(f):
    if f._c[0] != _ONE:
        raise DomainError(f"sqrt: constant term must be 1, got {f._c[0]}")
    s = [_ONE]
    half = Fraction(1, 2)
    for n in range(1, len(f._c)):
        acc = f._c[n]
        for k in range(1, n):
            if s[k] and s[n - k]:
                acc = acc - s[k] * s[n - k]
        s.append(acc * half)
    return Series._wrap(s)


def _exp(f):
    if f._c[0]:
        raise DomainError(f"exp: constant term must be 0, got {f._c[0]}")
    e = [_ONE]
    for n in range(1, len(f._c)):
        acc = _ZERO
        for k in range(1, n + 1):
            if f._c[k] and e[n - k]:
                acc = acc + f._c[k] * e[n - k] * k
        e.append(acc * Fraction(1, n))
    return Series._wrap(e)


def _log(f):
    if f._c[0] != _ONE:
        raise DomainError(f"log: constant term must be 1, got {f._c[0]}")
    if f.order == 0:
        return Series.zero(0)
    return (f.derivative() / f.truncate(f.order - 1)).antiderivative()


def _rational_power(f, alpha):
    # (f^a)' f = a f' f^a, solved coefficientwise
    if f._c[0] != _ONE:
        raise DomainError(f"power {alpha}: constant term must be 1, got {f._c[0]}")
    c = f._c
    p = [_ONE]
    for n in range(1, len(c)):
        acc = _ZERO
        for k in range(1, n + 1):
            if c[k] and p[n - k]:
                acc = acc + c[k] * p[n - k] * (alpha * k - (n - k))
        p.append(acc * Fraction(1, n))
    return Series._wrap(p)


def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def series_pow(f, k):
    return f.power(k)


def series_compose(f, g):
    """``f(g(x))`` by Horner's rule; requires ``g(0) == 0``."""
    if not isinstance(g, Series):
        raise TypeError("inner argument must be a Series")
    if g._c[0]:
        raise NonzeroInnerConstant(f"inner series has constant term {g._c[0]}")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = Series.constant(f._c[n], n)
    for k in range(n - 1, -1, -1):
        acc = acc * g
        acc = Series._wrap((acc._c[0] + f._c[k],) + acc._c[1:])
    return acc


def series_revert(h):
    """Compositional inverse of ``h`` (``h(0) = 0``, rational unit ``h[1]``).

    Coefficient n of the inverse is read off ``(1/n) [t^(n-1)] (t/h)^n``,
    i.e. the triangular system ``[t^n] h(hbar) = 0`` solved in closed form.
    """
    if h._c[0]:
        raise BadLinearTerm(f"reversion needs h(0) = 0, got {h._c[0]}")
    if h.order < 1:
        raise BadLinearTerm("reversion needs at least a linear term")
    h1 = h._c[1]
    if h1.is_zero() or not h1.is_constant():
        raise BadLinearTerm(f"linear term must be a nonzero rational, got {h1}")
    N = h.order
    phi = 1 / h.shift_down()  # t / h(t), order N-1
    out = [_ZERO] * (N + 1)
    power = Series.one(N - 1)
    for n in range(1, N + 1):
        power = power * phi
        out[n] = power._c[n - 1] * Fraction(1, n)
    return Series._wrap(out)


_ANALYTIC = {
    "sqrt": lambda f, g: f.sqrt(),
    "exp": lambda f, g: f.exp(),
    "log": lambda f, g: f.log(),
    "derivative": lambda f, g: f.derivative(),
    "antiderivative": lambda f, g: f.antiderivative(),
    "div": lambda f, g: f / g,
    "pow-int": lambda f, g: f.power(int(g)),
    "pow": lambda f, g: f.power(g),
}


def series_analytic(f, which, arg=None):
    """Apply one of ``div, sqrt, exp, log, pow-int, pow, derivative,
    antiderivative``; ``arg`` is the divisor or the exponent."""
    try:
        op = _ANALYTIC[which]
    except KeyError:
        raise ValueError(f"unknown analytic operation {which!r}") from None
    return op(f, arg)
