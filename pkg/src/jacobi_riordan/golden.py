"""Golden-file emission for regression diffing.

Every file is in records format and depends only on (suite, order), so a
rerun into an empty directory reproduces the same bytes.
"""
import os
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
from .elliptic import CATALOG, catalog_array
from .production import az_from_array, production_matrix
from .riordan import row_sums
from .textio import file_tag, header_lines, join_values, param_tag, series_records

PARAMETERS = (None, Fraction(0), Fraction(1), Fraction(-1))
AZ_ARRAYS = ("cn_sn", "dsn_sn", "dam_am")


def _header(kind, name, m, order):
    return {"kind": kind, "name": name, "order": order, "parameter": param_tag(m)}


def _catalog_tables(order):
    for name in CATALOG:
        for m in PARAMETERS:
            array = catalog_array(name, m, order)
            tag = file_tag(m)
            yield f"array_{name}_{tag}.txt", array.matrix.to_records(_header("array", name, m, order))
            yield f"prod_{name}_{tag}.txt", production_matrix(array).to_records(
                _header("production", name, m, order)
            )
            lines = header_lines(_header("rowsums", name, m, order))
            yield f"rowsums_{name}_{tag}.txt", "\n".join(lines + [f"values={join_values(row_sums(array))}"])


def _az_closed_forms(order):
    for name in AZ_ARRAYS:
        for m in PARAMETERS:
            az = az_from_array(catalog_array(name, m, order))
            lines = header_lines(_header("az", name, m, order))
            lines += series_records(az.A, "A") + series_records(az.Z, "Z")
            yield f"az_{name}_{file_tag(m)}.txt", "\n".join(lines)


def _applications(order):
    N = order + 3
    sech2 = fn.sech_series(N) ** 2
    waves = {
        "soliton1": TravelingWaveAnsatz(sech2.scale(-2), 4, -1),
        "soliton2": TravelingWaveAnsatz(Fraction(4, 3) - sech2.scale(2), -4, -1),
    }
    for label, wave in waves.items():
        lines = header_lines(_header("kdv-residual", label, 1, order)) + ["sign=minus"]
        yield f"kdv_{label}.txt", "\n".join(lines + series_records(kdv_residual(wave), "residual"))
    for m in (None, Fraction(1, 2), Fraction(1)):
        params = cnoidal_solve(m, -1, max(order, 8))
        res = kdv_residual(params.ansatz(N))
        header = _header("cnoidal", "a+b*cn^2", m, order)
        header.update(sign="minus", a=params.a, b=params.b, c=params.c)
        yield f"cnoidal_{file_tag(m)}.txt", "\n".join(header_lines(header) + series_records(res, "residual"))
    cn2 = cn2_array(None, max(order, 9))
    lines = header_lines(_header("cn2", "cn2_intcn2", None, order))
    lines += series_records(cn2.d, "d") + series_records(cn2.h, "h")
    yield "cn2_array_msym.txt", "\n".join(lines)
    for m in (None, Fraction(0), Fraction(1)):
        a, b, c = tline_quartic_solve(m, max(order, 6))
        lines = header_lines(_header("tline-quartic", "sn", m, order)) + [f"a={a}", f"b={b}", f"c={c}"]
        yield f"tline_quartic_{file_tag(m)}.txt", "\n".join(lines)
    params = TlineParams([1, 2, -1, Fraction(1, 2)], [1, 3, -2], None)
    V = tline_voltage(params, order)
    yield "tline_voltage_msym.txt", "\n".join(
        header_lines(_header("tline-voltage", "V", None, order)) + series_records(V, "V")
    )
    for j in range(params.N + 1):
        sl = tline_riordan_elements(params, j, order)
        header = _header("tline-elements", f"slice{j}", None, order)
        header.update(normalizer=sl.normalizer, consistent=str(sl.consistent).lower())
        text = sl.table.to_records(header)
        text += "\n" + "\n".join(series_records(sl.term, "term") + series_records(sl.literal_form, "literal"))
        yield f"tline_elements_slice{j}_msym.txt", text


SUITES = {
    "paper-tables": _catalog_tables,
    "az-closed-forms": _az_closed_forms,
    "applications": _applications,
}


def golden_emit(suite, directory, order=10):
    """Write the suite's files under ``directory``; returns the paths in order."""
    names = list(SUITES) if suite == "all" else [suite]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown golden suite {suite!r}")
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name in names:
        for filename, text in SUITES[name](order):
            path = os.path.join(directory, filename)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text + "\n")
            paths.append(path)
    return paths
