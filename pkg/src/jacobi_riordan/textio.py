"""Records-format helpers for series, value lists and headers."""
from fractions import Fraction

from .matrices import parse_records
from .polys import ParamPoly
from .series import Series


def param_tag(m):
    if m is None:
        return "symbolic"
    return str(Fraction(m))


def file_tag(m):
    """Filesystem-safe parameter tag: ``msym``, ``m0``, ``m1``, ``m-1``, ``m1_2``."""
    if m is None:
        return "msym"
    return "m" + str(Fraction(m)).replace("/", "_")


def series_records(series, prefix="coeff", egf=False):
    values = series.egf() if egf else series.coeffs
    lines = [f"{prefix}.order={series.order}"]
    lines += [f"{prefix}.{n}={c}" for n, c in enumerate(values)]
    return lines


def series_from_records(fields, prefix="coeff", egf=False):
    order = int(fields[f"{prefix}.order"])
    values = [ParamPoly.parse(fields[f"{prefix}.{n}"]) for n in range(order + 1)]
    return Series.from_egf(values) if egf else Series(values)


def header_lines(header):
    return [f"{k}={v}" for k, v in header.items()]


def join_values(values):
    return ",".join(str(v) for v in values)


def split_values(text):
    return [ParamPoly.parse(v) for v in text.split(",")]


__all__ = [
    "param_tag",
    "file_tag",
    "series_records",
    "series_from_records",
    "header_lines",
    "join_values",
    "split_values",
    "parse_records",
]
