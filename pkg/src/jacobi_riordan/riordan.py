"""Exponential Riordan arrays ``[d(t), h(t)]``.

Entry ``(n, k)`` of the array is ``n!/k! [t^n] d(t) h(t)^k``.  Arrays are
immutable; the matrix is built on first access and cached.
"""
from __future__ import annotations

import enum
import threading
from fractions import Fraction
from math import factorial

from .errors import InvalidPair
from .functions import exp_series
from .matrices import LTMatrix
from .polys import ParamPoly
from .series import Series

__all__ = [
    "RiordanArray",
    "SubgroupTag",
    "build_array",
    "identity_array",
    "multiply",
    "inverse",
    "ftra_apply",
    "row_sums",
    "classify_subgroup",
    "is_palindromic",
    "first_column_triangle",
]

DEFAULT_ORDER = 10


class RiordanArray:
    """The pair ``(d, h)`` truncated at a common order ``N``.

    ``d(0) = 1``, ``h(0) = 0`` and ``h[1]`` must be a nonzero rational.
    """

    __slots__ = ("d", "h", "order", "_matrix", "_lock")

    def __init__(self, d, h, order=None):
        if order is None:
            order = min(d.order, h.order)
        if d.order < order or h.order < order:
            raise InvalidPair(
                f"order {order} exceeds the known order of d ({d.order}) or h ({h.order})"
            )
        if order < 1:
            raise InvalidPair("array order must be at least 1")
        if d[0] != 1:
            raise InvalidPair(f"d(0) must be 1, got {d[0]}")
        if h[0]:
            raise InvalidPair(f"h(0) must be 0, got {h[0]}")
        if h[1].is_zero() or not h[1].is_constant():
            raise InvalidPair(f"h'(0) must be a nonzero rational, got {h[1]}")
        self.d = d.truncate(order)
        self.h = h.truncate(order)
        self.order = order
        self._matrix = None
        self._lock = threading.Lock()

    @property
    def matrix(self):
        if self._matrix is None:
            with self._lock:
                if self._matrix is None:
                    self._matrix = _generic_elements(self.d, self.h, self.order)
        return self._matrix

    def __getitem__(self, idx):
        return self.matrix[idx]

    def __eq__(self, other):
        if isinstance(other, RiordanArray):
            return self.order == other.order and self.d == other.d and self.h == other.h
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.h))

    def __mul__(self, other):
        if isinstance(other, RiordanArray):
            return multiply(self, other)
        if isinstance(other, Series):
            return ftra_apply(self, other)
        return NotImplemented

    def truncate(self, order):
        return RiordanArray(self.d, self.h, order)

    def subs_m(self, value):
        return RiordanArray(self.d.subs_m(value), self.h.subs_m(value), self.order)

    def inverse(self):
        return inverse(self)

    def __repr__(self):
        return f"RiordanArray(order={self.order}, d={self.d!r}, h={self.h!r})"


def _generic_elements(d, h, N):
    rows = [[] for _ in range(N + 1)]
    col = d
    for k in range(N + 1):
        inv_kfact = Fraction(1, factorial(k))
        for n in range(k, N + 1):
            rows[n].append(col[n] * (factorial(n) * inv_kfact))
        if k < N:
            col = col * h
    return LTMatrix(rows)


def build_array(d, h, order=None):
    return RiordanArray(d, h, order)


def identity_array(order=DEFAULT_ORDER):
    return RiordanArray(Series.one(order), Series.x(order))


def multiply(left, right):
    """``[g, f] * [u, v] = [g * u(f), v(f)]``."""
    order = min(left.order, right.order)
    f = left.h.truncate(order)
    d = left.d.truncate(order) * right.d.truncate(order).compose(f)
    h = right.h.truncate(order).compose(f)
    return RiordanArray(d, h, order)


def inverse(array):
    """``[d, h]^-1 = [1 / d(hbar), hbar]``."""
    hbar = array.h.revert()
    return RiordanArray(1 / array.d.compose(hbar), hbar, array.order)


def ftra_apply(array, g):
    """Action on a generating function: ``d * g(h)``."""
    order = min(array.order, g.order)
    return array.d.truncate(order) * g.truncate(order).compose(array.h.truncate(order))


def row_sums(array):
    """Row sums ``n! [t^n] d e^h``, read from the generating function."""
    egf = ftra_apply(array, exp_series(array.order))
    return egf.egf()


class SubgroupTag(enum.Enum):
    APPELL = "Appell"
    LAGRANGE = "Lagrange"
    BELL = "Bell"
    HITTING_TIME = "HittingTime"
    CHECKERBOARD = "Checkerboard"
    DERIVATIVE = "Derivative"
    NONE = "None"

    def __str__(self):
        return self.value


def classify_subgroup(array):
    """Every subgroup whose defining identity holds to the array's order.

    Identities involving a derivative are compared to order ``N - 1``.
    ``{NONE}`` is returned when no identity holds.
    """
    d, h, N = array.d, array.h, array.order
    tags = set()
    if h == Series.x(N):
        tags.add(SubgroupTag.APPELL)
    if d == Series.one(N):
        tags.add(SubgroupTag.LAGRANGE)
    if h == d.truncate(N - 1).shift_up():
        tags.add(SubgroupTag.BELL)
    # t h'/h = h' / (h/t)
    if d.agrees(h.derivative() / h.shift_down(), N - 1):
        tags.add(SubgroupTag.HITTING_TIME)
    if d.is_even() and h.is_odd():
        tags.add(SubgroupTag.CHECKERBOARD)
    if d.agrees(h.derivative(), N - 1):
        tags.add(SubgroupTag.DERIVATIVE)
    return tags or {SubgroupTag.NONE}


def is_palindromic(array):
    """Every entry's coefficient vector in m reads the same reversed."""
    return array.matrix.is_palindromic()


def _sign_rule(signs):
    if signs is None:
        return lambda row, col: 1
    if callable(signs):
        return signs
    if signs == "row-parity":
        return lambda row, col: -1 if row % 2 else 1
    if signs == "column-parity":
        return lambda row, col: -1 if col % 2 else 1
    if signs == "checkerboard":
        return lambda row, col: -1 if (row + col) % 2 else 1
    raise ValueError(f"unknown sign rule {signs!r}")


def first_column_triangle(array, signs=None):
    """Nonzero first-column entries, each expanded into its m-coefficients.

    Row ``r`` lists the coefficients of the r-th nonzero entry of column 0,
    padded with zeros to ``r + 1`` cells.  ``signs`` is ``None``, one of
    ``"row-parity"``, ``"column-parity"``, ``"checkerboard"``, or a callable
    ``(row, col) -> +-1`` applied cell by cell.
    """
    rule = _sign_rule(signs)
    entries = [c for c in array.matrix.column(0) if c]
    rows = []
    for r, poly in enumerate(entries):
        coeffs = list(poly.coeffs)
        if len(coeffs) > r + 1:
            raise ValueError(
                f"first-column entry {poly} has degree {poly.degree} > row index {r}"
            )
        coeffs += [Fraction(0)] * (r + 1 - len(coeffs))
        rows.append([ParamPoly.const(c * rule(r, j)) for j, c in enumerate(coeffs)])
    return LTMatrix(rows)
