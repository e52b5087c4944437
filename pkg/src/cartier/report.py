"""Stable JSON / CSV serialization of verification reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .engine import VerificationReport

COLUMNS = (
    "p", "s", "m", "n", "q", "g",
    "matrix_rank", "a_number", "p_rank",
    "cc_honest", "cc_paper",
    "formula_rank_num", "formula_rank_den",
    "formula_a_num", "formula_a_den",
    "flags",
    "points_total", "maximal",
    "skip_reason",
)


@dataclass(frozen=True)
class SkipRecord:
    """A sweep instance that was not computed, with the reason."""

    p: int
    s: int
    m: int
    reason: str


def to_record(report: VerificationReport | SkipRecord) -> dict:
    if isinstance(report, SkipRecord):
        rec = dict.fromkeys(COLUMNS)
        rec.update(p=report.p, s=report.s, m=report.m, skip_reason=report.reason)
        return rec
    return {
        "p": report.p,
        "s": report.s,
        "m": report.m,
        "n": report.n,
        "q": report.q,
        "g": report.g,
        "matrix_rank": report.matrix_rank,
        "a_number": report.a_number,
        "p_rank": report.p_rank,
        "cc_honest": report.cc_honest,
        "cc_paper": report.cc_paper,
        "formula_rank_num": report.formula_rank.numerator,
        "formula_rank_den": report.formula_rank.denominator,
        "formula_a_num": report.formula_a.numerator,
        "formula_a_den": report.formula_a.denominator,
        "flags": dict(report.flags),
        "points_total": report.points_total,
        "maximal": report.maximal,
        "skip_reason": None,
    }


def from_record(rec: dict) -> VerificationReport | SkipRecord:
    if rec.get("skip_reason"):
        return SkipRecord(rec["p"], rec["s"], rec["m"], rec["skip_reason"])
    return VerificationReport(
        p=rec["p"],
        s=rec["s"],
        m=rec["m"],
        n=rec["n"],
        q=rec["q"],
        g=rec["g"],
        matrix_rank=rec["matrix_rank"],
        a_number=rec["a_number"],
        p_rank=rec["p_rank"],
        cc_honest=rec["cc_honest"],
        cc_paper=rec["cc_paper"],
        formula_rank=Fraction(rec["formula_rank_num"], rec["formula_rank_den"]),
        formula_a=Fraction(rec["formula_a_num"], rec["formula_a_den"]),
        flags=dict(rec["flags"]),
        points_total=rec["points_total"],
        maximal=rec["maximal"],
    )


def to_json(report) -> str:
    return json.dumps(to_record(report), separators=(", ", ": "))


def parse_json(line: str):
    return from_record(json.loads(line))


def _flags_to_cell(flags: dict[str, bool] | None) -> str:
    if not flags:
        return ""
    return ";".join(f"{k}={int(bool(v))}" for k, v in flags.items())


def _flags_from_cell(cell: str) -> dict[str, bool]:
    out = {}
    for item in filter(None, cell.split(";")):
        k, v = item.split("=")
        out[k] = v == "1"
    return out


def _csv_row(report) -> list[str]:
    rec = to_record(report)
    row = []
    for col in COLUMNS:
        v = rec[col]
        if col == "flags":
            row.append(_flags_to_cell(v))
        elif v is None:
            row.append("")
        elif isinstance(v, bool):
            row.append("true" if v else "false")
        else:
            row.append(str(v))
    return row


def to_csv(reports, header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(COLUMNS)
    for r in reports:
        w.writerow(_csv_row(r))
    return buf.getvalue()


def parse_csv(text: str) -> list:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec: dict = {}
        for col in COLUMNS:
            cell = row[col]
            if col == "flags":
                rec[col] = _flags_from_cell(cell)
            elif cell == "":
                rec[col] = None
            elif col == "maximal":
                rec[col] = cell == "true"
            elif col == "skip_reason":
                rec[col] = cell
            else:
                rec[col] = int(cell)
        out.append(from_record(rec))
    return out


def csv_header() -> bytes:
    return to_csv([]).encode()


def emit_report(report, fmt: str = "json", header: bool = True) -> bytes:
    """Serialize one report: a JSON line, or a CSV row (optionally with header)."""
    if fmt == "json":
        return (to_json(report) + "\n").encode()
    if fmt == "csv":
        return to_csv([report], header=header).encode()
    raise ValueError(f"unknown format {fmt!r}")
