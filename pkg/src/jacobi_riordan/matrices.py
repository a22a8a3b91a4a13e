"""Lower-triangular matrices of ParamPoly and their text serializations.

Three formats are supported: an aligned ``grid``, ``csv`` with one entry per
cell, and ``records`` (``key=value`` lines, ``entry.<n>.<k>=<poly>``).
"""
from __future__ import annotations

import csv
import io

from .polys import ParamPoly, as_poly

FORMATS = ("grid", "csv", "records")


class LTMatrix:
    """Row ``n`` holds columns ``0 .. n + extra``.

    ``extra = 0`` is an ordinary lower-triangular matrix; production
    matrices use ``extra = 1`` for their superdiagonal.
    """

    extra = 0

    def __init__(self, rows, extra=None):
        if extra is not None:
            self.extra = extra
        rows = tuple(tuple(as_poly(v) for v in row) for row in rows)
        for n, row in enumerate(rows):
            if len(row) != n + 1 + self.extra:
                raise ValueError(
                    f"row {n} has {len(row)} entries, expected {n + 1 + self.extra}"
                )
        self._rows = rows

    @property
    def rows(self):
        return self._rows

    @property
    def size(self):
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            n, k = idx
            row = self._rows[n]
            return row[k] if k < len(row) else ParamPoly.zero()
        return self._rows[idx]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if isinstance(other, LTMatrix):
            return self.extra == other.extra and self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash((self.extra, self._rows))

    def truncate(self, size):
        return type(self)(self._rows[:size], extra=self.extra)

    def subs_m(self, value):
        return type(self)(
            [[c.subs(value) for c in row] for row in self._rows], extra=self.extra
        )

    def row_sums(self):
        out = []
        for row in self._rows:
            acc = ParamPoly.zero()
            for c in row:
                acc = acc + c
            out.append(acc)
        return out

    def column(self, k):
        return [self[n, k] for n in range(self.size)]

    def is_palindromic(self):
        return all(c.is_palindromic() for row in self._rows for c in row)

    def matmul(self, other):
        """Product of two lower-triangular matrices of equal size."""
        if self.extra or other.extra or self.size != other.size:
            raise ValueError("matmul needs two square lower-triangular matrices")
        rows = []
        for n in range(self.size):
            row = []
            for k in range(n + 1):
                acc = ParamPoly.zero()
                for j in range(k, n + 1):
                    a, b = self._rows[n][j], other._rows[j][k]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return LTMatrix(rows)

    @classmethod
    def identity(cls, size):
        return cls([[1 if k == n else 0 for k in range(n + 1)] for n in range(size)])

    # -- serialization ------------------------------------------------------

    def to_grid(self):
        cells = [[str(c) for c in row] for row in self._rows]
        if not cells:
            return ""
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self._rows:
            writer.writerow([str(c) for c in row])
        return buf.getvalue().rstrip("\n")

    def to_records(self, header=None):
        lines = [f"{k}={v}" for k, v in (header or {}).items()]
        lines.append(f"rows={self.size}")
        lines.append(f"extra={self.extra}")
        for n, row in enumerate(self._rows):
            for k, c in enumerate(row):
                lines.append(f"entry.{n}.{k}={c}")
        return "\n".join(lines)

    def format(self, fmt="grid", header=None):
        if fmt == "grid":
            return self.to_grid()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "records":
            return self.to_records(header)
        raise ValueError(f"unknown format {fmt!r}")

    def __str__(self):
        return self.to_grid()

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size}, extra={self.extra})"

    @classmethod
    def from_csv(cls, text, extra=0):
        rows = [[ParamPoly.parse(c) for c in row] for row in csv.reader(io.StringIO(text))]
        return cls(rows, extra=extra)

    @classmethod
    def from_records(cls, text):
        fields = parse_records(text)
        size, extra = int(fields["rows"]), int(fields.get("extra", 0))
        rows = [
            [ParamPoly.parse(fields[f"entry.{n}.{k}"]) for k in range(n + 1 + extra)]
            for n in range(size)
        ]
        return cls(rows, extra=extra)


def parse_records(text):
    """``key=value`` lines to a dict (order preserved)."""
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed record line {line!r}")
        out[key.strip()] = value.strip()
    return out
