"""Polynomials in the elliptic parameter m with rational coefficients.

A :class:`ParamPoly` is stored as a tuple of integer numerators over one
positive common denominator, kept in lowest terms.  This keeps the inner
loops of series arithmetic on machine-friendly ``int`` operations and
defers gcd work to one reduction per result.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["ParamPoly", "as_poly", "poly_arith", "parameter_poly"]


def _reduce(nums, den):
    n = len(nums)
    while n and not nums[n - 1]:
        n -= 1
    nums = tuple(nums[:n])
    if not nums:
        return (), 1
    g = den
    for c in nums:
        g = gcd(g, c)
        if g == 1:
            break
    if g != 1:
        nums = tuple(c // g for c in nums)
        den //= g
    return nums, den


class ParamPoly:
    """Polynomial ``c0 + c1*m + c2*m^2 + ...`` over the rationals.

    Instances are immutable and hashable.  Arithmetic accepts ``int`` and
    ``Fraction`` operands as constant polynomials.

    >>> p = ParamPoly([1, 1])
    >>> q = ParamPoly([1, -1])
    >>> str(p * q)
    '1 - m^2'
    >>> ParamPoly.parse("3*m^2 + 2*m + 3")(1)
    Fraction(8, 1)
    """

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, coeffs=()):
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._nums, self._den = _reduce(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, nums, den):
        obj = cls.__new__(cls)
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        obj._nums, obj._den = _reduce(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def m(cls):
        """The parameter itself."""
        return _M

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self):
        """Coefficients as a tuple of ``Fraction``, ascending powers of m."""
        return tuple(Fraction(c, self._den) for c in self._nums)

    @property
    def degree(self):
        """Degree in m; ``None`` for the zero polynomial."""
        return len(self._nums) - 1 if self._nums else None

    def is_zero(self):
        return not self._nums

    def is_constant(self):
        return len(self._nums) <= 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} depends on m")
        return Fraction(self._nums[0], self._den) if self._nums else Fraction(0)

    def constant_term(self):
        return Fraction(self._nums[0], self._den) if self._nums else Fraction(0)

    def is_palindromic(self):
        return self._nums == self._nums[::-1]

    def __bool__(self):
        return bool(self._nums)

    def __len__(self):
        return len(self._nums)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._nums:
            return self
        if not self._nums:
            return other
        a, da = self._nums, self._den
        b, db = other._nums, other._den
        if da == db:
            fa = fb = 1
            den = da
        else:
            g = gcd(da, db)
            fa, fb = db // g, da // g
            den = da * fa
        n = max(len(a), len(b))
        out = [0] * n
        for i, c in enumerate(a):
            out[i] = c * fa
        for i, c in enumerate(b):
            out[i] += c * fb
        return ParamPoly._raw(out, den)

    __radd__ = __add__

    def __neg__(self):
        if not self._nums:
            return self
        obj = ParamPoly.__new__(ParamPoly)
        obj._nums = tuple(-c for c in self._nums)
        obj._den = self._den
        obj._hash = None
        return obj

    def __sub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other or not self._nums:
                return _ZERO
            return ParamPoly._raw([c * other for c in self._nums], self._den)
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._nums, other._nums
        if not a or not b:
            return _ZERO
        if len(b) == 1:
            b0 = b[0]
            out = [c * b0 for c in a]
        elif len(a) == 1:
            a0 = a[0]
            out = [c * a0 for c in b]
        else:
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
        return ParamPoly._raw(out, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational constant only."""
        if isinstance(other, ParamPoly):
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division of ParamPoly by zero")
        return self * Fraction(other.denominator, other.numerator)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("ParamPoly powers must be non-negative integers")
        out, base = _ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, value):
        """Exact value at ``m = value``."""
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self._nums):
            acc = acc * value + c
        return acc / self._den

    __call__ = evaluate

    def subs(self, value):
        """Specialize m, returning a constant ParamPoly."""
        return ParamPoly.const(self.evaluate(value))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self._nums == other._nums and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self == ParamPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nums, self._den))
        return self._hash

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._nums:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "m" if i == 1 else f"m^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"ParamPoly('{self}')"

    _TERM = re.compile(
        r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*(m)(?:\^(\d+))?)?|(m)(?:\^(\d+))?)\s*"
    )

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``; accepts terms in any order."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        coeffs = {}
        pos = 0
        first = True
        while pos < len(text):
            match = cls._TERM.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            sign, num, m1, e1, m2, e2 = match.groups()
            if not sign and not first:
                raise ValueError(f"missing operator in {text!r}")
            if num is not None:
                c = Fraction(num)
                power = (int(e1) if e1 else 1) if m1 else 0
            elif m2:
                c = Fraction(1)
                power = int(e2) if e2 else 1
            else:
                raise ValueError(f"cannot parse polynomial {text!r}")
            if sign == "-":
                c = -c
            coeffs[power] = coeffs.get(power, 0) + c
            pos = match.end()
            first = False
        top = max(coeffs)
        return cls([coeffs.get(i, 0) for i in range(top + 1)])


_ZERO = ParamPoly()
_ONE = ParamPoly([1])
_M = ParamPoly([0, 1])


def as_poly(value):
    """Coerce int / Fraction / ParamPoly to ParamPoly; NotImplemented otherwise."""
    if isinstance(value, ParamPoly):
        return value
    if isinstance(value, int):
        return ParamPoly._raw([value], 1)
    if isinstance(value, Rational):
        value = Fraction(value)
        return ParamPoly._raw([value.numerator], value.denominator)
    if isinstance(value, str):
        return ParamPoly.parse(value)
    return NotImplemented


def parameter_poly(m=None):
    """``m`` as a ParamPoly: the symbol when ``m is None``, else the constant."""
    return ParamPoly.m() if m is None else ParamPoly.const(m)


def poly_arith(p, q=None, which="add", value=None):
    """Dispatch helper: ``add``/``mul`` two polynomials or ``eval`` p at m=value."""
    p = as_poly(p)
    if which == "add":
        return p + as_poly(q)
    if which == "mul":
        return p * as_poly(q)
    if which in ("eval", "eval-at"):
        if value is None:
            raise ValueError("eval-at needs a value for m")
        return p.evaluate(value)
    raise ValueError(f"unknown operation {which!r}")
