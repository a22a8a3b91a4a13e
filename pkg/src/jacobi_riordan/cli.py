"""Command-line interface.

    jacobi-riordan <subcommand> [name] [--order N]
        [--parameter-m R | --modulus-k R | --symbolic]
        [--format grid|csv|records] [--egf] [--sign plus|minus] [--out DIR]

Exit status: 0 on success, 2 on a usage error, 1 on a domain error (the
error class name is printed).
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import functions as fn
from .applications import (
    TlineParams,
    TravelingWaveAnsatz,
    cn2_array,
    cnoidal_solve,
    kdv_residual,
    tline_quartic_solve,
    tline_riordan_elements,
    tline_voltage,
)
from .checks import CHECKS, run_checks
from .elliptic import (
    AUXILIARY,
    CATALOG,
    am_series,
    arcsn_series,
    catalog_array,
    elliptic_A,
    quotient_by_name,
)
from .errors import RiordanError, UnknownName
from .matrices import FORMATS
from .production import az_from_array, ogf_jfraction, production_matrix
from .riordan import DEFAULT_ORDER, classify_subgroup, inverse, is_palindromic, multiply, row_sums
from .textio import header_lines, join_values, param_tag, series_records

SUBCOMMANDS = (
    "series", "array", "prod", "az", "inverse", "multiply", "rowsums",
    "classify", "check", "kdv", "tline", "cfrac", "golden",
)
ARRAY_NAMES = tuple(CATALOG) + tuple(AUXILIARY)


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _rational_list(text):
    return [_rational(v) for v in text.split(",") if v.strip()]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER)
    param = common.add_mutually_exclusive_group()
    param.add_argument("--parameter-m", type=_rational, metavar="R")
    param.add_argument("--modulus-k", type=_rational, metavar="R")
    param.add_argument("--symbolic", action="store_true")
    common.add_argument("--format", choices=FORMATS, default="grid")
    common.add_argument("--egf", action="store_true",
                        help="print series as n! * a_n (matrix entries are already EGF-normalized)")
    common.add_argument("--sign", choices=("plus", "minus"), default="minus")
    common.add_argument("--out", metavar="DIR")

    parser = argparse.ArgumentParser(
        prog="jacobi-riordan",
        description="Exact exponential Riordan arrays built from Jacobi elliptic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "series": "print a Jacobi-function series (sn, cn, dn, am, arcsn, A, sc, nd, ...)",
        "array": "print a catalog array",
        "prod": "print the production matrix of a catalog array",
        "az": "print the A and Z series of a catalog array",
        "inverse": "print the inverse of a catalog array",
        "multiply": "print the product of two catalog arrays",
        "rowsums": "print row sums of a catalog array",
        "classify": "list subgroup tags and palindromy of a catalog array",
        "check": "run the identity suite (name 'all' or one check)",
        "kdv": "KdV traveling waves: soliton | cnoidal | cn2",
        "tline": "transmission line: quartic | voltage | elements",
        "cfrac": "continued-fraction levels of an OGF (name 'sech' or a comma list)",
        "golden": "write golden files: paper-tables | az-closed-forms | applications | all",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        p.add_argument("name", nargs="*")
        if name == "tline":
            p.add_argument("--g", type=_rational_list, default=None,
                           help="g0,g1,...,g_{N+1}")
            p.add_argument("--f", type=_rational_list, default=None,
                           help="f1,...,f_{N+1}")
            p.add_argument("--slice", type=int, default=0)
        if name == "cfrac":
            p.add_argument("--depth", type=int, default=4)
    return parser


def _parameter(args):
    if args.modulus_k is not None:
        return args.modulus_k**2
    return args.parameter_m


def _one_name(parser, args, choices, default=None):
    names = args.name or ([default] if default else [])
    if len(names) != 1:
        parser.error(f"{args.command} takes exactly one name")
    if choices is not None and names[0] not in choices:
        raise UnknownName(f"unknown name {names[0]!r}; choose from {', '.join(choices)}")
    return names[0]


def _header(kind, name, args, m):
    return {"kind": kind, "name": name, "order": args.order, "parameter": param_tag(m)}


def _series_text(series, args, header, prefix="coeff"):
    if args.format == "records":
        lines = header_lines(header) + [f"egf={'true' if args.egf else 'false'}"]
        return "\n".join(lines + series_records(series, prefix, args.egf))
    if args.format == "csv":
        values = series.egf() if args.egf else series.coeffs
        return "\n".join(f"{n},{c}" for n, c in enumerate(values))
    return series.to_text(egf=args.egf)


def _named_series(name, m, order):
    if name == "am":
        return am_series(m, order)
    if name == "arcsn":
        return arcsn_series(m, order)
    if name == "A":
        return elliptic_A(m, order)
    return quotient_by_name(name, m, order)


# -- subcommand bodies -----------------------------------------------------------


def cmd_series(parser, args, m):
    name = _one_name(parser, args, None)
    series = _named_series(name, m, args.order)
    return _series_text(series, args, _header("series", name, args, m))


def cmd_array(parser, args, m):
    name = _one_name(parser, args, ARRAY_NAMES)
    array = catalog_array(name, m, args.order)
    return array.matrix.format(args.format, _header("array", name, args, m))


def cmd_prod(parser, args, m):
    name = _one_name(parser, args, ARRAY_NAMES)
    P = production_matrix(catalog_array(name, m, args.order))
    return P.format(args.format, _header("production", name, args, m))


def cmd_inverse(parser, args, m):
    name = _one_name(parser, args, ARRAY_NAMES)
    inv = inverse(catalog_array(name, m, args.order))
    return inv.matrix.format(args.format, _header("inverse", name, args, m))


def cmd_multiply(parser, args, m):
    if len(args.name) != 2 or any(n not in ARRAY_NAMES for n in args.name):
        parser.error(f"multiply takes two names from {', '.join(ARRAY_NAMES)}")
    left, right = (catalog_array(n, m, args.order) for n in args.name)
    prod = multiply(left, right)
    return prod.matrix.format(args.format, _header("product", "*".join(args.name), args, m))


def cmd_az(parser, args, m):
    name = _one_name(parser, args, ARRAY_NAMES)
    az = az_from_array(catalog_array(name, m, args.order))
    return az_text(az, args.format, args.egf, _header("az", name, args, m))


def az_text(az, fmt, egf, header):
    if fmt == "records":
        lines = header_lines(header) + [f"egf={'true' if egf else 'false'}"]
        return "\n".join(lines + series_records(az.A, "A", egf) + series_records(az.Z, "Z", egf))
    a = az.A.to_text(egf=egf)
    z = az.Z.to_text(egf=egf)
    return f"A:\n{a}\nZ:\n{z}"


def cmd_rowsums(parser, args, m):
    name = _one_name(parser, args, ARRAY_NAMES)
    sums = row_sums(catalog_array(name, m, args.order))
    if args.format == "records":
        return "\n".join(header_lines(_header("rowsums", name, args, m)) + [f"values={join_values(sums)}"])
    return join_values(sums)


def cmd_classify(parser, args, m):
    name = _one_name(parser, args, ARRAY_NAMES)
    array = catalog_array(name, m, args.order)
    tags = ",".join(sorted(str(t) for t in classify_subgroup(array)))
    pal = "true" if is_palindromic(array) else "false"
    if args.format == "records":
        return "\n".join(header_lines(_header("classify", name, args, m)) + [f"tags={tags}", f"palindromic={pal}"])
    return f"tags: {tags}\npalindromic: {pal}"


def cmd_check(parser, args, m):
    names = args.name or ["all"]
    if names == ["all"]:
        names = None
    else:
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            raise UnknownName(f"unknown check {unknown[0]!r}; choose from all, {', '.join(CHECKS)}")
    results = run_checks(names, args.order)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    failed = sum(not ok for _, ok in results)
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    return "\n".join(lines), (1 if failed else 0)


def _soliton_waves(order):
    sech2 = fn.sech_series(order) ** 2
    return {
        "soliton1": TravelingWaveAnsatz(sech2.scale(-2), 4),
        "soliton2": TravelingWaveAnsatz(Fraction(4, 3) - sech2.scale(2), -4),
    }


def cmd_kdv(parser, args, m):
    what = _one_name(parser, args, ("soliton", "cnoidal", "cn2"), default="soliton")
    sign = -1 if args.sign == "minus" else 1
    if what == "soliton":
        out = []
        for label, wave in _soliton_waves(args.order + 3).items():
            wave = TravelingWaveAnsatz(wave.profile, wave.speed, sign)
            res = kdv_residual(wave)
            out.append(_series_text(res, args, _header("kdv-residual", label, args, 1), prefix=label))
        return "\n".join(out)
    if what == "cnoidal":
        params = cnoidal_solve(m, sign, max(args.order, 8))
        res = kdv_residual(params.ansatz(args.order + 3))
        header = _header("cnoidal", "a+b*cn^2", args, m)
        header.update(sign=args.sign, a=params.a, b=params.b, c=params.c)
        if args.format == "records":
            return "\n".join(header_lines(header) + series_records(res, "residual"))
        return f"a = {params.a}\nb = {params.b}\nc = {params.c}\nresidual:\n{res.to_text()}"
    array = cn2_array(m, max(args.order, 9))
    return array.matrix.format(args.format, _header("array", "cn2_intcn2", args, m))


def _tline_params(parser, args, m):
    g = args.g if args.g is not None else [0, 1, 0]
    f = args.f if args.f is not None else [1, 1]
    try:
        return TlineParams(g, f, m)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_tline(parser, args, m):
    what = _one_name(parser, args, ("quartic", "voltage", "elements"), default="quartic")
    if what == "quartic":
        a, b, c = tline_quartic_solve(m, max(args.order, 6))
        if args.format == "records":
            return "\n".join(header_lines(_header("tline-quartic", "sn", args, m)) + [f"a={a}", f"b={b}", f"c={c}"])
        return f"a = {a}\nb = {b}\nc = {c}"
    params = _tline_params(parser, args, m)
    if what == "voltage":
        V = tline_voltage(params, args.order)
        return _series_text(V, args, _header("tline-voltage", "V", args, m), prefix="V")
    sl = tline_riordan_elements(params, args.slice, args.order)
    header = _header("tline-elements", f"slice{args.slice}", args, m)
    header.update(normalizer=sl.normalizer, consistent=str(sl.consistent).lower())
    table = sl.table.format(args.format, header)
    if args.format == "records":
        extra = series_records(sl.term, "term") + series_records(sl.literal_form, "literal")
        return table + "\n" + "\n".join(extra)
    return f"{table}\nslice term:\n{sl.term.to_text()}\nliteral form:\n{sl.literal_form.to_text()}"


def cmd_cfrac(parser, args, m):
    name = _one_name(parser, args, None, default="sech")
    depth = args.depth
    if name == "sech":
        seq = [c.constant_value() for c in fn.sech_series(2 * depth).egf()]
    else:
        try:
            seq = _rational_list(name)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    levels = ogf_jfraction(seq, depth)
    if args.format == "records":
        return f"kind=cfrac\nname={name}\ndepth={depth}\nlevels={join_values(levels)}"
    return join_values(levels)


def cmd_golden(parser, args, m):
    from .golden import SUITES, golden_emit

    suite = _one_name(parser, args, tuple(SUITES) + ("all",), default="all")
    if not args.out:
        parser.error("golden needs --out DIR")
    paths = golden_emit(suite, args.out, args.order)
    return "\n".join(os.path.relpath(p, args.out) for p in paths)


COMMANDS = {name: globals()[f"cmd_{name}"] for name in SUBCOMMANDS}


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv`` and execute; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.order < 1:
        print(f"{parser.prog}: error: --order must be >= 1", file=stderr)
        return 2
    m = _parameter(args)
    try:
        result = COMMANDS[args.command](parser, args, m)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (RiordanError, UnknownName) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
