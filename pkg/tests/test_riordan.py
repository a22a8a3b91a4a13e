import threading
from fractions import Fraction
from math import comb

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

import oracles as orc
from jacobi_riordan import functions as fn
from jacobi_riordan.elliptic import CATALOG, arcsn_series, catalog_array, jacobi_series
from jacobi_riordan.errors import InvalidPair
from jacobi_riordan.matrices import LTMatrix
from jacobi_riordan.polys import ParamPoly
from jacobi_riordan.riordan import (
    RiordanArray,
    SubgroupTag,
    build_array,
    classify_subgroup,
    first_column_triangle,
    ftra_apply,
    identity_array,
    inverse,
    is_palindromic,
    multiply,
    row_sums,
)
from jacobi_riordan.series import Series

M = ParamPoly.m()
coef = st.fractions(min_value=-3, max_value=3, max_denominator=3)
mixed = st.lists(coef, max_size=2).map(ParamPoly)


def pairs(order, c=mixed):
    lead = st.sampled_from([Fraction(1), Fraction(2), Fraction(-1, 2)])

    def build(args):
        ds, hs, a1 = args
        d = Series([1] + ds)
        h = Series([0, a1] + hs)
        return RiordanArray(d, h, order)

    return st.tuples(
        st.lists(c, min_size=order, max_size=order),
        st.lists(c, min_size=order - 1, max_size=order - 1),
        lead,
    ).map(build)


# -- construction -------------------------------------------------------------

def test_pascal_entries_are_binomials():
    P = build_array(fn.exp_series(8), Series.x(8))
    assert all(P.matrix[n, k] == comb(n, k) for n in range(9) for k in range(n + 1))


def test_identity_array_matrix():
    assert identity_array(5).matrix == LTMatrix.identity(6)


def test_cn_sn_entries_against_definition_oracle():
    sn, cn, _ = orc.jacobi(8)
    expected = orc.rows_to_polys(orc.generic_elements(cn, sn, 8))
    A = catalog_array("cn_sn", None, 8)
    assert [list(r) for r in A.matrix.rows] == expected
    assert A.matrix[2, 0] == -1 and A.matrix[2, 1] == 0 and A.matrix[2, 2] == 1


@pytest.mark.parametrize(
    "d, h",
    [
        (Series([2, 1], 4), Series.x(4)),
        (Series.one(4), Series([1, 1], 4)),
        (Series.one(4), Series([0, 0, 1], 4)),
        (Series.one(4), Series([0, M], 4)),
    ],
)
def test_invalid_pairs(d, h):
    with pytest.raises(InvalidPair):
        build_array(d, h)


@given(pairs(6))
@settings(max_examples=15)
def test_columns_are_d_times_h_power(A):
    N = A.order
    col_gf = A.d
    fact = Fraction(1)
    for k in range(N + 1):
        if k:
            fact *= k
            col_gf = col_gf * A.h
        expect = [ParamPoly.zero()] * (N + 1)
        for n in range(k, N + 1):
            nf = Fraction(1)
            for i in range(2, n + 1):
                nf *= i
            expect[n] = col_gf[n] * (nf / fact)
        assert list(A.matrix.column(k)) == expect


# -- group ----------------------------------------------------------------

def test_laguerre_factorization():
    prod = multiply(catalog_array("cn_sn", None, 10), catalog_array("laguerre", None, 10))
    assert prod == catalog_array("cn1psn_sn1psn", None, 10)


def test_identity_is_neutral():
    A = catalog_array("dsn_sn", None, 8)
    assert multiply(A, identity_array(8)) == A
    assert multiply(identity_array(8), A) == A


@given(pairs(8), pairs(8))
@settings(max_examples=10)
def test_matrix_route_equals_pair_route(L, R):
    assert multiply(L, R).matrix == L.matrix.matmul(R.matrix)


@given(pairs(5), pairs(5), pairs(5))
@settings(max_examples=10)
def test_associativity(L, R, S):
    assert multiply(multiply(L, R), S) == multiply(L, multiply(R, S))


@given(pairs(7))
@settings(max_examples=10)
def test_random_inverse(A):
    ident = identity_array(7)
    assert multiply(A, inverse(A)) == ident
    assert multiply(inverse(A), A) == ident


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_inverse(name):
    A = catalog_array(name, None, 8)
    ident = identity_array(8)
    assert multiply(A, inverse(A)) == ident
    assert multiply(inverse(A), A) == ident


def test_cn_sn_inverse_closed_form():
    N = 10
    inv = inverse(catalog_array("cn_sn", None, N))
    assert inv.d == Series([1, 0, -1], N).power(Fraction(-1, 2))
    assert inv.h == arcsn_series(None, N)


def test_identity_inverse():
    assert inverse(identity_array(6)) == identity_array(6)


def test_cn1psn_sn_inverse_closed_form():
    N = 10
    inv = inverse(catalog_array("cn1psn_sn", None, N))
    assert inv.d == Series([1, 1], N) * Series([1, 0, -1], N).power(Fraction(-1, 2))
    assert inv.h == arcsn_series(None, N)


# -- FTRA and row sums ---------------------------------------------------------

def test_ftra_on_exp_is_row_sum_gf():
    A = catalog_array("cn_sn", None, 8)
    assert ftra_apply(A, fn.exp_series(8)).egf() == row_sums(A)
    assert row_sums(A) == A.matrix.row_sums()


def test_ftra_identity():
    g = fn.cos_series(7)
    assert ftra_apply(identity_array(7), g) == g


def test_ftra_cn_sn_at_one():
    got = ftra_apply(catalog_array("cn_sn", 1, 6), fn.exp_series(6)).egf()
    assert got == [1, 1, 0, -4, -8, 32, 216]


@given(pairs(6), st.fractions(max_denominator=5), st.fractions(max_denominator=5))
@settings(max_examples=10)
def test_ftra_linearity(A, alpha, beta):
    g1, g2 = fn.cos_series(6), fn.sinh_series(6) + 3
    left = ftra_apply(A, g1.scale(alpha) + g2.scale(beta))
    right = ftra_apply(A, g1).scale(alpha) + ftra_apply(A, g2).scale(beta)
    assert left == right


@pytest.mark.parametrize(
    "name, m, expected",
    [
        ("cn_sn", 0, [1, 1, 0, -3, -8, -3, 56]),
        ("dsn_sn", 1, [1, 1, -1, -7, -3, 97, 275]),
        ("identity", None, [1] * 7),
    ],
)
def test_row_sums(name, m, expected):
    assert row_sums(catalog_array(name, m, 6)) == expected


def test_row_sums_exp_arcsin_sn_is_exp_x_plus_sin():
    got = row_sums(catalog_array("exp_arcsin_sn", 0, 8))
    assert got == orc.egf(orc.taylor(sp.exp(orc.x + sp.sin(orc.x)), 8))


# -- classification ---------------------------------------------------------

def test_classify_examples():
    assert classify_subgroup(catalog_array("cn_sn", None, 10)) == {SubgroupTag.CHECKERBOARD}
    assert classify_subgroup(catalog_array("dsn_sn", None, 10)) == {
        SubgroupTag.DERIVATIVE,
        SubgroupTag.CHECKERBOARD,
    }
    assert classify_subgroup(catalog_array("pascal", None, 10)) == {SubgroupTag.APPELL}


def test_classify_hitting_time_and_bell():
    N = 8
    h = Series.x(N) * fn.geometric_series(N)
    tags = classify_subgroup(build_array(fn.geometric_series(N), h))
    assert {SubgroupTag.HITTING_TIME, SubgroupTag.BELL} <= tags


def test_classify_none():
    A = build_array(Series([1, 1, 1], 6), Series([0, 1, 0, 1, 1], 6))
    assert classify_subgroup(A) == {SubgroupTag.NONE}


# -- palindromy -----------------------------------------------------------

def test_palindromic_examples():
    assert is_palindromic(catalog_array("dsn_sn", None, 10))
    assert is_palindromic(catalog_array("pascal", None, 10))


def test_cn_sn_palindromy_against_oracle():
    sn, cn, _ = orc.jacobi(8)
    oracle = all(
        orc.to_poly(e).is_palindromic()
        for row in orc.generic_elements(cn, sn, 8)
        for e in row
    )
    assert oracle is False
    assert is_palindromic(catalog_array("cn_sn", None, 8)) is oracle


# -- first-column triangle ---------------------------------------------------

def _first_column_oracle(d_list, order):
    col = [e * sp.factorial(n) for n, e in enumerate(d_list[: order + 1])]
    rows = []
    for e in col:
        if sp.expand(e) != 0:
            cs = sp.Poly(e, orc.m).all_coeffs()[::-1]
            rows.append([orc.to_fraction(c) for c in cs])
    return [r + [0] * (i + 1 - len(r)) for i, r in enumerate(rows)]


def test_first_column_dsn_sn():
    sn, cn, dn = orc.jacobi(8)
    oracle = _first_column_oracle(orc.mul(list(cn), list(dn)), 8)
    tri = first_column_triangle(catalog_array("dsn_sn", None, 8))
    assert [list(r) for r in tri.rows] == oracle
    signed = first_column_triangle(catalog_array("dsn_sn", None, 8), "row-parity")
    assert [list(r) for r in signed.rows][:4] == [[1], [1, 1], [1, 14, 1], [1, 135, 135, 1]]


def test_first_column_dam_am():
    _, _, dn = orc.jacobi(8)
    oracle = _first_column_oracle(list(dn), 8)
    tri = first_column_triangle(catalog_array("dam_am", None, 8))
    assert [list(r) for r in tri.rows] == oracle
    assert [list(r) for r in tri.rows][:3] == [[1], [0, -1], [0, 4, 1]]


def test_first_column_constant():
    tri = first_column_triangle(catalog_array("pascal", None, 5))
    assert [list(r) for r in tri.rows] == [[1] + [0] * r for r in range(6)]


def test_first_column_custom_rule():
    A = catalog_array("dsn_sn", None, 6)
    assert first_column_triangle(A, lambda r, c: 1) == first_column_triangle(A)
    with pytest.raises(ValueError):
        first_column_triangle(A, "bogus")


# -- specialization and caching ----------------------------------------------

@pytest.mark.parametrize("r", [0, 1, -1, Fraction(1, 2)])
@pytest.mark.parametrize("name", ["cn_sn", "dsn_sn", "dam_am", "cn1psn_sn"])
def test_specialization_commutes(name, r):
    sym = catalog_array(name, None, 8)
    assert sym.matrix.subs_m(r) == catalog_array(name, r, 8).matrix
    assert row_sums(sym.subs_m(r)) == [v.subs(r) for v in row_sums(sym)]


def test_matrix_built_once_across_threads():
    A = catalog_array("cn_sn", None, 8)
    seen = []
    threads = [threading.Thread(target=lambda: seen.append(A.matrix)) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(s is seen[0] for s in seen)


def test_jacobi_oracle_agrees():
    sn, cn, dn = orc.jacobi(10)
    t = jacobi_series(None, 10)
    assert (t.sn, t.cn, t.dn) == tuple(orc.to_series(s) for s in (sn, cn, dn))
