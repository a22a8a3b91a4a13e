"""One test per acceptance criterion, exact equality throughout."""
from fractions import Fraction

import sympy as sp

import oracles as orc
from jacobi_riordan import functions as fn
from jacobi_riordan.applications import (
    TravelingWaveAnsatz,
    cn2_array,
    cnoidal_solve,
    kdv_residual,
    tline_quartic_solve,
)
from jacobi_riordan.elliptic import (
    CATALOG,
    am_series,
    arcsn_series,
    catalog_array,
    jacobi_series,
    reversion_identity_check,
)
from jacobi_riordan.golden import golden_emit
from jacobi_riordan.matrices import LTMatrix
from jacobi_riordan.polys import ParamPoly
from jacobi_riordan.production import (
    az_from_array,
    array_from_az,
    production_bivariate_check,
    production_matrix,
    rows_from_recurrence,
    tridiagonal_to_orthopoly,
)
from jacobi_riordan.riordan import RiordanArray, identity_array, inverse, multiply, row_sums
from jacobi_riordan.series import Series

M = ParamPoly.m()
x = orc.x


def test_criterion_1_reference_coefficients(acceptance_report):
    arcsn = arcsn_series(None, 6).egf()[:6]
    want = [0, 1, 0, 1 + M, 0, 3 * (3 * M**2 + 2 * M + 3)]
    h = cn2_array(None, 10).h
    display = [0, 1, 0, Fraction(-1, 3), 0, (M + 1) / 15, 0,
               (-2 * M**2 - 13 * M - 2) / 315, 0, (M**3 + 30 * M**2 + 30 * M + 1) / 2835]
    ok = arcsn == want and list(h.coeffs[:10]) == display
    assert acceptance_report("1 reference coefficients (arcsn EGF, int cn^2 display)", ok)


def test_criterion_2_row_sums(acceptance_report):
    cases = {
        ("cn_sn", 0): [1, 1, 0, -3, -8, -3, 56],
        ("cn_sn", 1): [1, 1, 0, -4, -8, 32, 216],
        ("dsn_sn", 1): [1, 1, -1, -7, -3, 97, 275],
        ("dam_am", 1): [1, 1, 0, -3, -4, 21, 80],
    }
    ok = all(row_sums(catalog_array(n, m, 6)) == v for (n, m), v in cases.items())
    cos_exp_sin = orc.egf(orc.taylor(sp.cos(x) * sp.exp(sp.sin(x)), 10))
    ok = ok and row_sums(catalog_array("cn_sn", 0, 10)) == cos_exp_sin
    exp_x_sin = orc.egf(orc.taylor(sp.exp(x + sp.sin(x)), 10))
    ok = ok and row_sums(catalog_array("exp_arcsin_sn", 0, 10)) == exp_x_sin
    assert acceptance_report("2 row-sum sequences", ok)


def test_criterion_3_closed_form_az(acceptance_report):
    az = az_from_array(catalog_array("cn_sn", None, 10))
    ok = az.A == orc.to_series(orc.taylor(sp.sqrt((1 - x**2) * (1 - orc.m * x**2)), 9))
    ok = ok and az.Z == orc.to_series(orc.taylor(-x * sp.sqrt(1 - orc.m * x**2) / sp.sqrt(1 - x**2), 9))
    az = az_from_array(catalog_array("dsn_sn", 1, 10))
    ok = ok and (az.A, az.Z) == (Series([1, 0, -1], 9), Series([0, -2], 9))
    az = az_from_array(catalog_array("dam_am", 0, 10))
    ok = ok and (az.A, az.Z) == (Series.one(9), Series.zero(9))
    az = az_from_array(catalog_array("dam_am", 1, 10))
    ok = ok and (az.A, az.Z) == (fn.cos_series(9), -fn.sin_series(9))
    assert acceptance_report("3 closed-form A/Z sequences", ok)


def test_criterion_4_round_trips(acceptance_report):
    ident = identity_array(10)
    ok = True
    for name in CATALOG:
        A = catalog_array(name, None, 10)
        az = az_from_array(A)
        ok = ok and multiply(A, inverse(A)) == ident
        ok = ok and array_from_az(az, order=10) == A
        ok = ok and rows_from_recurrence(az, 10) == A.matrix
        ok = ok and production_bivariate_check(A)
    assert acceptance_report("4 group and reconstruction round-trips", ok)


def test_criterion_5_elliptic_identities(acceptance_report):
    N = 12
    t = jacobi_series(None, N)
    one = Series.one(N)
    ok = t.sn * t.sn + t.cn * t.cn == one
    ok = ok and t.dn * t.dn + (t.sn * t.sn).scale(M) == one
    ok = ok and t.sn.derivative() == (t.cn * t.dn).truncate(N - 1)
    ok = ok and fn.sin_series(N).compose(am_series(None, N)) == t.sn
    t0, t1 = jacobi_series(0, N), jacobi_series(1, N)
    ok = ok and (t0.sn, t0.cn, t0.dn) == (fn.sin_series(N), fn.cos_series(N), one)
    sech = fn.sech_series(N)
    ok = ok and (t1.sn, t1.cn, t1.dn) == (fn.tanh_series(N), sech, sech)
    assert acceptance_report("5 elliptic identities at order 12", ok)


def test_criterion_6_reversion_identities(acceptance_report):
    ok = reversion_identity_check("ex3", m=None, order=10)
    ok = ok and reversion_identity_check("ex4", m=None, order=8)
    ok = ok and reversion_identity_check("ex4", m=None, order=10)
    assert acceptance_report("6 integral-reversion identities for sn/(1+sn) and sn(1+sn)/(1-sn)", ok)


def _three_term(power, shift):
    N = 10
    A = RiordanArray(fn.sech_series(N) ** power, fn.tanh_series(N), N)
    P = production_matrix(A)
    rec = tridiagonal_to_orthopoly(P, inverse(A))
    # stored convention P_{n+1} = (z - alpha_n) P_n - beta_n P_{n-1}, so
    # P_{n+1} = z P_n + n(n+shift) P_{n-1} means beta_n = -n(n+shift)
    ok = P.is_tridiagonal() and rec.verified
    ok = ok and all(rec.beta[n] == -n * (n + shift) for n in range(1, N))
    ok = ok and all(a == 0 for a in rec.alpha)
    inv = inverse(A)
    ok = ok and inv.d == orc.to_series(orc.taylor((1 - x**2) ** sp.Rational(-power, 2), N))
    ok = ok and inv.h == fn.arctanh_series(N)
    z = sp.Symbol("z")
    polys = [sp.Integer(1), z]
    for n in range(1, 8):
        polys.append(sp.expand(z * polys[n] + n * (n + shift) * polys[n - 1]))
    rows = inv.matrix.rows
    for n in range(9):
        coeffs = [orc.to_fraction(c) for c in sp.Poly(polys[n], z).all_coeffs()[::-1]]
        ok = ok and list(rows[n]) == coeffs
    return ok


def test_criterion_7_orthogonal_polynomials(acceptance_report):
    ok = _three_term(1, 0) and _three_term(2, 1)
    assert acceptance_report("7 orthogonal-polynomial extraction", ok)


def test_criterion_8_kdv_and_quartic(acceptance_report):
    N = 15
    sech2 = fn.sech_series(N) ** 2
    zero = Series.zero(N - 3)

    def both_vanish(sign):
        one = TravelingWaveAnsatz(sech2.scale(-2), 4, sign)
        two = TravelingWaveAnsatz(Fraction(4, 3) - sech2.scale(2), -4, sign)
        return kdv_residual(one) == zero and kdv_residual(two) == zero

    ok = any(both_vanish(s) for s in ("plus", "minus"))
    for m in (Fraction(1, 2), None):
        p = cnoidal_solve(m, "minus", 12)
        ok = ok and kdv_residual(p.ansatz(N)) == zero and not p.b.is_zero()
    ok = ok and tline_quartic_solve(None, 12) == (1, -(1 + M), M)
    assert acceptance_report("8 KdV residuals and transmission-line quartic", ok)


def test_criterion_9_golden_determinism(acceptance_report, tmp_path):
    first = golden_emit("all", tmp_path / "a")
    second = golden_emit("all", tmp_path / "b")
    ok = len(first) == len(second) and all(
        open(p, "rb").read() == open(q, "rb").read() for p, q in zip(first, second)
    )
    back = LTMatrix.from_records((tmp_path / "a" / "array_dsn_sn_msym.txt").read_text())
    ok = ok and back == catalog_array("dsn_sn", None, 10).matrix
    ok = ok and "values=1,1,0,-3,-8,-3,56," in (tmp_path / "a" / "rowsums_cn_sn_m0.txt").read_text()
    assert acceptance_report("9 golden suite determinism and round-trip", ok)
