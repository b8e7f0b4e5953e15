"""JSON and CSV forms for series and matrices.

Series JSON: ``{"kind": "dir"|"ord", "trunc": N, "coeffs": {"<index>":
"<polynomial text>"}}`` with zero coefficients omitted.  Matrix JSON uses
an ``"entries"`` map keyed ``"n,k"``.  CSV emits polynomial text cells in
canonical order, so outputs are stable byte-for-byte.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .matrices import DirMatrix
from .poly import ZERO, parse_polynomial
from .series import DirSeries, OrdSeries


def series_to_json(s: DirSeries | OrdSeries) -> dict[str, Any]:
    if isinstance(s, DirSeries):
        kind, lo = "dir", 1
    else:
        kind, lo = "ord", 0
    coeffs = {}
    for n in range(lo, s.trunc + 1):
        v = s[n]
        if not v.is_zero():
            coeffs[str(n)] = v.to_text()
    return {"kind": kind, "trunc": s.trunc, "coeffs": coeffs}


def series_from_json(obj: dict[str, Any]) -> DirSeries | OrdSeries:
    kind = obj["kind"]
    trunc = int(obj["trunc"])
    raw = {int(k): parse_polynomial(v) for k, v in obj["coeffs"].items()}
    if kind == "dir":
        return DirSeries(trunc, tuple(raw.get(n, ZERO) for n in range(1, trunc + 1)))
    if kind == "ord":
        return OrdSeries(trunc, tuple(raw.get(n, ZERO) for n in range(trunc + 1)))
    raise ValueError(f"unknown series kind {kind!r}")


def series_to_json_text(s: DirSeries | OrdSeries) -> str:
    return json.dumps(series_to_json(s), indent=None, sort_keys=True)


def series_from_json_text(text: str) -> DirSeries | OrdSeries:
    return series_from_json(json.loads(text))


def series_to_csv(s: DirSeries | OrdSeries) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "coefficient"])
    lo = 1 if isinstance(s, DirSeries) else 0
    for n in range(lo, s.trunc + 1):
        writer.writerow([n, s[n].to_text()])
    return out.getvalue()


def matrix_to_csv(m: DirMatrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for n in range(m.row_lo, m.row_hi + 1):
        writer.writerow([v.to_text() for v in m.row(n)])
    return out.getvalue()


def matrix_to_json(m: DirMatrix) -> dict[str, Any]:
    entries = {
        f"{n},{k}": v.to_text()
        for (n, k), v in sorted(m.entries.items())
        if not v.is_zero()
    }
    return {
        "kind": m.kind,
        "rows": [m.row_lo, m.row_hi],
        "cols": [m.col_lo, m.col_hi],
        "entries": entries,
    }


def matrix_to_json_text(m: DirMatrix) -> str:
    return json.dumps(matrix_to_json(m), indent=None, sort_keys=True)
