"""Renderers for tables, check reports and sweeps (ascii, csv, json)."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

from .checks import CheckReport
from .conjectures import ConditionAReport, FamilySweepReport, IffResult
from .game import GrundyTable, PassGrundyTable

FORMATS = ("ascii", "csv", "json")


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _ascii(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [len(h) for h in header]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"


def _table(header: Sequence[str], rows: list[Sequence[Any]], fmt: str, extra: dict | None = None) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        doc = dict(extra or {})
        doc["rows"] = [dict(zip(header, r)) for r in rows]
        return _json(doc)
    return _ascii(header, rows)


def render_grundy(table: GrundyTable | PassGrundyTable, fmt: str = "ascii") -> str:
    meta = {"rule": list(table.rule.amounts), "limit": table.limit}
    if isinstance(table, PassGrundyTable):
        rows = [(x, g0, g1) for x, (g0, g1) in enumerate(zip(table.row0, table.row1))]
        return _table(("x", "g0", "g1"), rows, fmt, meta)
    rows = [(x, g) for x, g in enumerate(table.values)]
    return _table(("x", "g"), rows, fmt, meta)


def read_grundy_csv(text: str) -> dict[str, list[int]]:
    """Parse CSV written by :func:`render_grundy` into columns."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    cols: dict[str, list[int]] = {h: [] for h in header}
    for row in reader:
        for h, cell in zip(header, row):
            cols[h].append(int(cell))
    return cols


def render_check(report: CheckReport, fmt: str = "ascii") -> str:
    if fmt == "json":
        return _json(report.to_dict())
    rows = [(v.x, v.expected, v.actual) for v in report.violations]
    if fmt == "csv":
        return _csv(("x", "expected", "actual"), rows)
    lo, hi = report.range
    head = f"{report.property_name} on {report.rule} over [{lo}, {hi}]: "
    head += "PASS" if report.passed else f"FAIL ({len(rows)} violations)"
    if not rows:
        return head + "\n"
    return head + "\n" + _ascii(("x", "expected", "actual"), rows)


def render_condition_a(report: ConditionAReport, fmt: str = "ascii") -> str:
    header = ("w", "dist", "w+s3-s1", "w+s3-3s1", "ok")
    rows = [(w.w, w.dist, w.upper, w.lower, w.ok) for w in report.witnesses]
    meta = {
        "property_name": "condition-a",
        "rule": list(report.rule.amounts),
        "preperiod": report.cert.preperiod,
        "period": report.cert.period,
        "holds": report.holds,
    }
    if fmt == "ascii":
        head = (
            f"condition (a) on {report.rule} (q={report.cert.preperiod}, p={report.cert.period}): "
            + ("HOLDS" if report.holds else "FAILS")
            + f", {len(rows)} P-positions with even dist >= 4\n"
        )
        return head + (_ascii(header, rows) if rows else "")
    return _table(header, rows, fmt, meta)


def iff_dict(result: IffResult) -> dict:
    return {
        "rule": list(result.rule.amounts),
        "preperiod": result.cert.preperiod,
        "period": result.cert.period,
        "reverse_mex": result.reverse_mex,
        "reverse_mex_loop": result.reverse_mex_loop,
        "condition_a": result.condition_a,
        "agree": result.agree,
        "agree_strict": result.agree_strict,
    }


def render_iff(result: IffResult, fmt: str = "ascii") -> str:
    d = iff_dict(result)
    if fmt == "json":
        return _json(d)
    header = list(d)
    row = [d[k] if k != "rule" else " ".join(map(str, d[k])) for k in header]
    return _table(header, [row], fmt)


def render_sweep(report: FamilySweepReport, fmt: str = "ascii") -> str:
    rows = [c.row() for c in report.cells]
    header = list(rows[0]) if rows else ["family", "a", "n"]
    if fmt == "json":
        return _json({"family": report.family, "proven_ok": report.proven_ok, "cells": rows})
    return _table(header, [[r[h] for h in header] for r in rows], fmt)


def render_summary(doc: dict, fmt: str = "ascii") -> str:
    if fmt == "json":
        return _json(doc)
    flat = _flatten(doc)
    if fmt == "csv":
        return _csv(("key", "value"), flat.items())
    return _ascii(("key", "value"), flat.items())


def _flatten(doc: dict, prefix: str = "") -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = v
    return out
