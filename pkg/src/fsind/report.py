"""LaTeX, CSV and JSON emitters for indicator matrices and zero audits."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass

from .engine import IndicatorMatrix
from .equivalence import reduce_matrix, zero_audit, zero_table

ORDER_NOTE = ("Row labels chi_{i.j} use this library's ordering of the centralizer characters; "
              "the j-indices can differ from other sources.")


@dataclass(frozen=True)
class ReportConfig:
    format: str = "latex"
    columns: tuple[int, ...] | None = None
    rows_per_table: int | None = 38

    def column_chunks(self, ndiv: int) -> list[int]:
        if self.columns is None:
            return [ndiv]
        if sum(self.columns) != ndiv:
            raise ValueError(f"column sizes sum to {sum(self.columns)}, but there are {ndiv} divisors")
        if any(c <= 0 for c in self.columns):
            raise ValueError("column sizes must be positive")
        return list(self.columns)


def emit(matrix: IndicatorMatrix, config: ReportConfig) -> str:
    if config.format == "latex":
        return to_latex(matrix, config)
    if config.format == "csv":
        return to_csv(matrix)
    if config.format == "json":
        return to_json(matrix)
    raise ValueError(f"unknown format {config.format!r}")


def to_latex(matrix: IndicatorMatrix, config: ReportConfig = ReportConfig()) -> str:
    classes = reduce_matrix(matrix)
    cap = config.rows_per_table or len(classes)
    out = [f"% {ORDER_NOTE}"]
    start = 0
    for width in config.column_chunks(len(matrix.divisors)):
        cols = list(range(start, start + width))
        start += width
        for r0 in range(0, len(classes), cap):
            chunk = classes[r0:r0 + cap]
            out.append("\\begin{table}[ht]")
            out.append(f"\\caption{{$D(S_{{{matrix.n}}})$ indicators: (exponent {matrix.exponent})}}")
            out.append(f"$\\begin{{array}}{{r|{'c' * width}}} \\hline")
            out.append("m = & " + " & ".join(str(matrix.divisors[c]) for c in cols) + " \\\\ \\hline")
            for cl in chunk:
                lab = cl.members[0]
                out.append(f"\\nu_m({lab.latex}) & " + " & ".join(str(cl.row[c]) for c in cols) + " \\\\")
            out.append("\\hline")
            out.append("\\end{array}$")
            out.append("\\end{table}")
    out.append("")
    out.append(f"The irreducible characters of $D(S_{{{matrix.n}}})$ have the following "
               f"{len(classes)} distinct I-equivalent classes:")
    out.append("$" + ", ".join(cl.latex() for cl in classes) + "$")
    return "\n".join(out) + "\n"


def parse_latex_grid(text: str) -> list[tuple[str, list[int]]]:
    """(label, values) for every indicator row, with split tables joined by label."""
    rows: dict[str, list[int]] = {}
    for mo in re.finditer(r"\\nu_m\(\\chi_\{(\d+\.\d+)\}\)(.*?)\\\\", text, re.S):
        vals = [int(x) for x in re.findall(r"-?\d+", mo.group(2))]
        rows.setdefault(mo.group(1), []).extend(vals)
    return list(rows.items())


def to_csv(matrix: IndicatorMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label"] + [f"m={d}" for d in matrix.divisors])
    for cl in reduce_matrix(matrix):
        w.writerow([str(cl.members[0])] + list(cl.row))
    return buf.getvalue()


def report_dict(matrix: IndicatorMatrix) -> dict:
    records, summary = zero_audit(matrix)
    return {
        "n": matrix.n,
        "exponent": matrix.exponent,
        "divisors": list(matrix.divisors),
        "note": ORDER_NOTE,
        "classes": [{"members": [str(lab) for lab in cl.members], "row": list(cl.row),
                     "homogeneous": cl.homogeneous} for cl in reduce_matrix(matrix)],
        "zeros": [{"label": str(r.label), "m": r.m, "classification": r.classification,
                   "reason": r.reason} for r in records],
        "summary": {"unexpected": summary.unexpected, "nontrivial_classes": summary.nontrivial_classes,
                    "nontrivial_values": summary.nontrivial_values},
    }


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def to_json(matrix: IndicatorMatrix) -> str:
    return dump_json(report_dict(matrix))


def zeros_report(matrix: IndicatorMatrix, fmt: str = "text") -> str:
    rows = zero_table(matrix)
    _, s = zero_audit(matrix)
    if fmt == "json":
        return dump_json({"n": matrix.n, "rows": [{"u": r.u, "m": list(r.ms), "count": r.count, "all": r.all_classes}
                                                  for r in rows],
                          "unexpected": s.unexpected, "nontrivial_values": s.nontrivial_values})
    if fmt == "latex":
        lines = ["\\begin{array}{c|c|cc}",
                 "D(S_n) & u & m & \\text{no. of chars with } \\nu_m = 0 \\\\ \\hline"]
        for r in rows:
            count = f"\\rm all\\ {r.count}" if r.all_classes else str(r.count)
            lines.append(f"S_{{{matrix.n}}} & {r.u} & {', '.join(map(str, r.ms))} & {count} \\\\")
        lines.append("\\end{array}")
        return "\n".join(lines) + "\n"
    lines = [f"D(S_{matrix.n}): {s.unexpected} unexpected zero(s) among {s.nontrivial_values} "
             f"non-trivial indicator values ({s.percent:.2f}%)"]
    if rows:
        lines.append(f"{'u':<20} {'m':<12} classes with nu_m = 0")
    for r in rows:
        count = f"all {r.count}" if r.all_classes else str(r.count)
        lines.append(f"{r.u:<20} {', '.join(map(str, r.ms)):<12} {count}")
    return "\n".join(lines) + "\n"

