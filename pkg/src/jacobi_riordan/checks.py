"""Named identity suite run by ``check``.

Each check takes the working order and returns True/False.
"""
from __future__ import annotations

from fractions import Fraction

from . import functions as fn
from .applications import (
    TravelingWaveAnsatz,
    cnoidal_solve,
    kdv_residual,
    tline_quartic_solve,
)
from .elliptic import (
    CATALOG,
    am_series,
    arcsn_series,
    catalog_array,
    jacobi_series,
    reversion_identity_check,
)
from .polys import ParamPoly
from .production import (
    array_from_az,
    az_from_array,
    production_bivariate_check,
    production_matrix,
    rows_from_recurrence,
    tridiagonal_to_orthopoly,
)
from .riordan import (
    RiordanArray,
    SubgroupTag,
    classify_subgroup,
    identity_array,
    inverse,
    is_palindromic,
    multiply,
    row_sums,
)
from .series import Series

M = ParamPoly.m()


def _pythagoras(N):
    t = jacobi_series(None, N)
    return t.sn * t.sn + t.cn * t.cn == Series.one(N)


def _dn_relation(N):
    t = jacobi_series(None, N)
    return t.dn * t.dn + (t.sn * t.sn).scale(M) == Series.one(N)


def _derivatives(N):
    t = jacobi_series(None, N)
    sn, cn, dn = t.sn, t.cn, t.dn
    lo = lambda s: s.truncate(N - 1)  # noqa: E731
    return (
        sn.derivative() == lo(cn * dn)
        and cn.derivative() == lo(-(sn * dn))
        and dn.derivative() == lo((sn * cn).scale(-M))
    )


def _sin_am(N):
    return fn.sin_series(N).compose(am_series(None, N)) == jacobi_series(None, N).sn


def _arcsn_reverts_to_sn(N):
    return arcsn_series(None, N).revert() == jacobi_series(None, N).sn


def _limits(N):
    t0, t1 = jacobi_series(0, N), jacobi_series(1, N)
    sech = fn.sech_series(N)
    return (
        (t0.sn, t0.cn, t0.dn) == (fn.sin_series(N), fn.cos_series(N), Series.one(N))
        and (t1.sn, t1.cn, t1.dn) == (fn.tanh_series(N), sech, sech)
    )


def _parity(N):
    t = jacobi_series(None, N)
    return t.sn.is_odd() and t.cn.is_even() and t.dn.is_even() and am_series(None, N).is_odd()


def _specialization(N):
    sym = jacobi_series(None, N)
    for r in (0, 1, -1, Fraction(1, 2)):
        t = jacobi_series(r, N)
        if (t.sn, t.cn, t.dn) != (sym.sn.subs_m(r), sym.cn.subs_m(r), sym.dn.subs_m(r)):
            return False
    return True


def _catalog(N):
    return [catalog_array(name, None, N) for name in CATALOG]


def _group_inverse(N):
    ident = identity_array(N)
    return all(
        multiply(A, inverse(A)) == ident and multiply(inverse(A), A) == ident
        for A in _catalog(N)
    )


def _az_roundtrip(N):
    return all(array_from_az(az_from_array(A), order=N) == A for A in _catalog(N))


def _recurrence_rows(N):
    return all(rows_from_recurrence(az_from_array(A), N) == A.matrix for A in _catalog(N))


def _production_gf(N):
    return all(production_bivariate_check(A) for A in _catalog(N))


def _laguerre_factorization(N):
    prod = multiply(catalog_array("cn_sn", None, N), catalog_array("laguerre", None, N))
    return prod == catalog_array("cn1psn_sn1psn", None, N)


def _reversion_sn_1psn(N):
    return reversion_identity_check("ex3", m=None, order=N)


def _reversion_ex4(N):
    return reversion_identity_check("ex4", m=None, order=N)


def _orthopoly(N):
    tanh, sech = fn.tanh_series(N), fn.sech_series(N)
    ok = True
    for d in (sech, sech * sech):
        A = RiordanArray(d, tanh, N)
        rec = tridiagonal_to_orthopoly(production_matrix(A), inverse(A))
        ok = ok and rec.verified
    return ok


def _reference_rowsums(N):
    expected = {
        ("cn_sn", 0): [1, 1, 0, -3, -8, -3, 56],
        ("cn_sn", 1): [1, 1, 0, -4, -8, 32, 216],
        ("dsn_sn", 1): [1, 1, -1, -7, -3, 97, 275],
        ("dam_am", 1): [1, 1, 0, -3, -4, 21, 80],
    }
    order = max(N, 6)
    return all(
        row_sums(catalog_array(name, m, order))[:7] == values
        for (name, m), values in expected.items()
    )


def _palindromic(N):
    return is_palindromic(catalog_array("dsn_sn", None, N))


def _subgroups(N):
    return classify_subgroup(catalog_array("dsn_sn", None, N)) == {
        SubgroupTag.DERIVATIVE,
        SubgroupTag.CHECKERBOARD,
    }


def _solitons(N):
    N = max(N, 12) + 3
    sech2 = fn.sech_series(N) ** 2
    one = TravelingWaveAnsatz(sech2.scale(-2), 4, "minus")
    two = TravelingWaveAnsatz(Fraction(4, 3) - sech2.scale(2), -4, "minus")
    zero = Series.zero(N - 3)
    return kdv_residual(one) == zero and kdv_residual(two) == zero


def _cnoidal(N):
    N = max(N, 12) + 3
    for m in (None, Fraction(1, 2)):
        params = cnoidal_solve(m, "minus", N)
        if kdv_residual(params.ansatz(N)) != Series.zero(N - 3):
            return False
    return True


def _quartic(N):
    return tline_quartic_solve(None, max(N, 6)) == (ParamPoly.one(), -(1 + M), M)


CHECKS = {
    "sn2_plus_cn2": _pythagoras,
    "dn2_plus_m_sn2": _dn_relation,
    "jacobi_derivatives": _derivatives,
    "sin_am_is_sn": _sin_am,
    "arcsn_reverts_to_sn": _arcsn_reverts_to_sn,
    "limits_m0_m1": _limits,
    "parity": _parity,
    "specialization_commutes": _specialization,
    "group_inverse_catalog": _group_inverse,
    "az_roundtrip_catalog": _az_roundtrip,
    "recurrence_rows_catalog": _recurrence_rows,
    "production_gf_catalog": _production_gf,
    "laguerre_factorization": _laguerre_factorization,
    "reversion_sn_1psn": _reversion_sn_1psn,
    "reversion_ex4": _reversion_ex4,
    "orthopoly_sech_tanh": _orthopoly,
    "reference_row_sums": _reference_rowsums,
    "dsn_sn_palindromic": _palindromic,
    "dsn_sn_subgroups": _subgroups,
    "kdv_solitons": _solitons,
    "cnoidal_residual": _cnoidal,
    "tline_quartic": _quartic,
}


def run_checks(names=None, order=10):
    """``[(name, passed)]`` for the selected checks (all by default)."""
    names = list(CHECKS) if names in (None, "all") else names
    return [(name, bool(CHECKS[name](order))) for name in names]
