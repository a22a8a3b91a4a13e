"""Jacobi elliptic functions as exact series and the catalog of elliptic arrays.

Everything is written in the parameter ``m`` (``m = k**2``), with
``dn**2 = 1 - m sn**2``.  ``m=None`` means symbolic m.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularAtOrigin, UnknownName
from .functions import arcsin_series, exp_series
from .polys import ParamPoly, parameter_poly
from .riordan import DEFAULT_ORDER, RiordanArray
from .series import Series

__all__ = [
    "JacobiTriple",
    "jacobi_series",
    "arcsn_series",
    "am_series",
    "jacobi_quotient",
    "quotient_by_name",
    "elliptic_A",
    "EllipticArraySpec",
    "CATALOG",
    "catalog_array",
    "reversion_identity_check",
]


@dataclass(frozen=True)
class JacobiTriple:
    sn: Series
    cn: Series
    dn: Series
    m: Fraction | None
    order: int


def jacobi_series(m=None, order=DEFAULT_ORDER):
    """sn, cn, dn from ``sn' = cn dn, cn' = -sn dn, dn' = -m sn cn``.

    Each new coefficient only needs lower ones, so the system is solved
    term by term from ``sn(0)=0, cn(0)=dn(0)=1``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    mp = parameter_poly(m)
    zero, one = ParamPoly.zero(), ParamPoly.one()
    s, c, d = [zero], [one], [one]

    def conv(a, b, n):
        acc = zero
        for i in range(n + 1):
            if a[i] and b[n - i]:
                acc = acc + a[i] * b[n - i]
        return acc

    for n in range(order):
        inv = Fraction(1, n + 1)
        s_next = conv(c, d, n) * inv
        c_next = -conv(s, d, n) * inv
        d_next = -(mp * conv(s, c, n)) * inv
        s.append(s_next)
        c.append(c_next)
        d.append(d_next)
    return JacobiTriple(Series(s), Series(c), Series(d), m, order)


def elliptic_A(m=None, order=DEFAULT_ORDER):
    """``sqrt((1 - t^2)(1 - m t^2))``."""
    mp = parameter_poly(m)
    return Series([1, 0, -(1 + mp), 0, mp], order).sqrt()


def arcsn_series(m=None, order=DEFAULT_ORDER):
    """Incomplete elliptic integral of the first kind, ``int_0^x dt / A(t)``."""
    return (1 / elliptic_A(m, order - 1)).antiderivative()


def am_series(m=None, order=DEFAULT_ORDER):
    """Jacobi amplitude, the antiderivative of dn."""
    dn = jacobi_series(m, order - 1).dn if order > 1 else Series.one(0)
    return dn.antiderivative()


_NUMER = ("sn", "cn", "dn", "1")


def jacobi_quotient(numer, denom, m=None, order=DEFAULT_ORDER):
    """``numer / denom`` with ``numer`` in {sn, cn, dn, 1} and ``denom`` in {cn, dn}."""
    if denom == "sn":
        raise SingularAtOrigin(f"{numer}/sn has a pole at the origin")
    if denom not in ("cn", "dn") or numer not in _NUMER:
        raise ValueError(f"unsupported quotient {numer}/{denom}")
    t = jacobi_series(m, order)
    top = Series.one(order) if numer == "1" else getattr(t, numer)
    return top / getattr(t, denom)


_LETTER = {"s": "sn", "c": "cn", "d": "dn", "n": "1"}


def quotient_by_name(name, m=None, order=DEFAULT_ORDER):
    """Glaisher two-letter names: ``sc``, ``sd``, ``nc``, ``nd``, ``cd``, ``dc``...

    ``xn`` is the plain function ``x``; names ending in ``s`` are singular.
    """
    if len(name) != 2 or name[0] not in _LETTER or name[1] not in _LETTER:
        raise UnknownName(f"unknown Jacobi function {name!r}")
    if name[1] == "n":
        if name[0] == "n":
            return Series.one(order)
        return getattr(jacobi_series(m, order), _LETTER[name[0]])
    return jacobi_quotient(_LETTER[name[0]], _LETTER[name[1]], m, order)


# -- catalog ------------------------------------------------------------------


def _cn_sn(m, N):
    t = jacobi_series(m, N)
    return t.cn, t.sn


def _dsn_sn(m, N):
    t = jacobi_series(m, N)
    return t.cn * t.dn, t.sn


def _dam_am(m, N):
    t = jacobi_series(m, N)
    return t.dn, t.dn.truncate(N - 1).antiderivative()


def _exp_arcsin_sn(m, N):
    sn = jacobi_series(m, N).sn
    return arcsin_series(N).compose(sn).exp(), sn


def _cn1psn_sn(m, N):
    t = jacobi_series(m, N)
    return t.cn / (1 + t.sn), t.sn


def _cn1psn_sn1psn(m, N):
    t = jacobi_series(m, N)
    return t.cn / (1 + t.sn), t.sn / (1 + t.sn)


def _cn2_intcn2(m, N):
    cn = jacobi_series(m, N).cn
    sq = cn * cn
    return sq, sq.truncate(N - 1).antiderivative()


def _ex4_array(m, N):
    t = jacobi_series(m, N)
    return t.cn / (1 - t.sn), t.sn * (1 + t.sn) / (1 - t.sn)


def _identity(m, N):
    return Series.one(N), Series.x(N)


def _pascal(m, N):
    return exp_series(N), Series.x(N)


def _laguerre(m, N):
    x = Series.x(N)
    return 1 / (1 + x), x / (1 + x)


def _ex4_transform(m, N):
    x = Series.x(N)
    return 1 / (1 - x), x * (1 + x) / (1 - x)


CATALOG = {
    "cn_sn": _cn_sn,
    "dsn_sn": _dsn_sn,
    "dam_am": _dam_am,
    "exp_arcsin_sn": _exp_arcsin_sn,
    "cn1psn_sn": _cn1psn_sn,
    "cn1psn_sn1psn": _cn1psn_sn1psn,
    "cn2_intcn2": _cn2_intcn2,
    "ex4_array": _ex4_array,
}
"""The elliptic arrays; ``AUXILIARY`` holds the m-free helper arrays."""

AUXILIARY = {
    "identity": _identity,
    "pascal": _pascal,
    "laguerre": _laguerre,
    "ex4_transform": _ex4_transform,
}


@dataclass(frozen=True)
class EllipticArraySpec:
    name: str
    parameter: Fraction | None = None
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.name not in CATALOG and self.name not in AUXILIARY:
            raise UnknownName(f"unknown catalog array {self.name!r}")
        if self.parameter is not None:
            object.__setattr__(self, "parameter", Fraction(self.parameter))


def catalog_array(spec, m=None, order=None):
    """Build a named array.  Accepts a spec or a bare name."""
    if not isinstance(spec, EllipticArraySpec):
        spec = EllipticArraySpec(spec, m, DEFAULT_ORDER if order is None else order)
    build = CATALOG.get(spec.name) or AUXILIARY[spec.name]
    d, h = build(spec.parameter, spec.order)
    return RiordanArray(d, h, spec.order)


# -- reversion identities -----------------------------------------------------


def _ex3_lhs_rhs(m, N):
    sn = jacobi_series(m, N).sn
    lhs = sn / (1 + sn)
    mp = parameter_poly(m)
    # (1-2y)(1-2y-(m-1)y^2)
    radicand = Series([1, -2], N) * Series([1, -2, 1 - mp], N)
    rhs = (1 / radicand.truncate(N - 1).sqrt()).antiderivative().revert()
    return lhs, rhs


def _vbar_ex4(N):
    root = Series([1, 6, 1], N).sqrt()
    vbar = (root - Series([1, 1], N)) / 2
    vbar_prime = (Series([3, 1], N) - root) / (2 * root)
    return vbar, vbar_prime


def _ex4_lhs_rhs(m, N):
    sn = jacobi_series(m, N).sn
    lhs = sn * (1 + sn) / (1 - sn)
    vbar, vbar_prime = _vbar_ex4(N - 1)
    integrand = vbar_prime / elliptic_A(m, N - 1).compose(vbar)
    return lhs, integrand.antiderivative().revert()


def _general_lhs_rhs(v, m, N):
    v = v.truncate(N)
    sn = jacobi_series(m, N).sn
    lhs = v.compose(sn)
    vbar = v.revert()
    integrand = vbar.derivative() / elliptic_A(m, N - 1).compose(vbar.truncate(N - 1))
    return lhs, integrand.antiderivative().revert()


def reversion_identity_check(which, v=None, m=None, order=DEFAULT_ORDER):
    """Confirm one of the integral-reversion identities to ``order``.

    ``ex3``: sn/(1+sn) = Rev int_0^x dy / sqrt((1-2y)(1-2y-(m-1)y^2)).
    ``ex4``: sn(1+sn)/(1-sn) = Rev int_0^x vbar'(y) dy / A(vbar(y)) with the
    closed form vbar(x) = (sqrt(1+6x+x^2) - x - 1)/2.
    ``general``: v(sn) = Rev int_0^x vbar'(y) dy / A(vbar(y)) for a given v.
    """
    if which == "ex3":
        lhs, rhs = _ex3_lhs_rhs(m, order)
    elif which == "ex4":
        lhs, rhs = _ex4_lhs_rhs(m, order)
    elif which == "general":
        if v is None:
            raise ValueError("the general identity needs a series v")
        lhs, rhs = _general_lhs_rhs(v, m, order)
    else:
        raise UnknownName(f"unknown identity {which!r}")
    return lhs.agrees(rhs)
