"""Report and trace writers.

CSV columns and JSONL keys (one object per row, same names):

``benchmark, nd, algorithm, f_max, f_max_published, best, n_eval,
last_iteration, published_best, published_n_eval, tolerance_class,
deviation, count_deviation, verdict, reason, error, wall_time``

Reals are written with 17 significant digits in CSV and as shortest
round-trip decimals in JSONL, so both parse back to the same doubles.
Missing values are empty in CSV and ``null`` in JSONL.  ``wall_time`` is
the only field that differs between two runs of the same command.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from pathlib import Path

from .suite import SuiteReport

FIELDS = (
    "benchmark",
    "nd",
    "algorithm",
    "f_max",
    "f_max_published",
    "best",
    "n_eval",
    "last_iteration",
    "published_best",
    "published_n_eval",
    "tolerance_class",
    "deviation",
    "count_deviation",
    "verdict",
    "reason",
    "error",
    "wall_time",
)
FORMATS = ("csv", "markdown", "jsonl")


def row_record(row) -> dict:
    res, ref, v = row.result, row.reference, row.verdict
    return {
        "benchmark": row.benchmark,
        "nd": row.nd,
        "algorithm": row.algorithm,
        "f_max": row.fmax,
        "f_max_published": row.fmax_published,
        "best": res.best.fstar if res else None,
        "n_eval": res.n_eval if res else None,
        "last_iteration": res.last_iteration if res else None,
        "published_best": ref.best_fitness if ref else None,
        "published_n_eval": ref.n_eval if ref else None,
        "tolerance_class": ref.tolerance_class if ref else None,
        "deviation": v.deviation,
        "count_deviation": v.count_deviation,
        "verdict": v.verdict,
        "reason": v.reason,
        "error": row.error,
        "wall_time": res.wall_time if res else None,
    }


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.17g}"
    return v


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _num(v, digits=10):
    if v is None:
        return ""
    if isinstance(v, int):
        return f"{v:,}"
    if not math.isfinite(v):
        return str(v)
    if v != 0 and (abs(v) < 1e-3 or abs(v) >= 1e7):
        return f"{v:.{digits - 5}e}"
    return f"{v:,.{digits}g}"


def render_csv(report: SuiteReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for row in report.rows:
        rec = row_record(row)
        w.writerow([_csv_cell(rec[k]) for k in FIELDS])
    return buf.getvalue()


def render_jsonl(report: SuiteReport) -> str:
    lines = []
    for row in report.rows:
        rec = {k: _json_value(v) for k, v in row_record(row).items()}
        lines.append(json.dumps(rec, allow_nan=False))
    return "".join(line + "\n" for line in lines)


def render_markdown(report: SuiteReport) -> str:
    c = report.counts
    out = [
        f"# {report.algorithm} on {report.suite}",
        "",
        f"seed {report.seed}, generated {report.timestamp}; "
        f"{c['pass']} pass, {c['fail']} fail, {c['n/a']} n/a",
        "",
        "| f | N_d | f_max | best | N_eval | published best | published N_eval | verdict |",
        "|---|---:|---:|---:|---:|---:|---:|---|",
    ]
    for row in report.rows:
        rec = row_record(row)
        out.append(
            "| {} | {} | {} | {} | {} | {} | {} | {} |".format(
                row.benchmark,
                row.nd,
                _num(row.fmax_published),
                _num(rec["best"]),
                _num(rec["n_eval"]),
                _num(rec["published_best"]),
                _num(rec["published_n_eval"]),
                row.verdict.verdict,
            )
        )
    return "\n".join(out) + "\n"


RENDERERS = {"csv": render_csv, "jsonl": render_jsonl, "markdown": render_markdown}


@contextmanager
def _open(destination):
    if destination is None or destination == "-":
        yield sys.stdout
    elif hasattr(destination, "write"):
        yield destination
    else:
        with open(Path(destination), "w", newline="") as fh:
            yield fh


def emit_report(report: SuiteReport, format: str = "csv", destination=None) -> None:
    """Write ``report`` as csv, jsonl or markdown to a path, stream or stdout."""
    if format not in RENDERERS:
        raise ValueError(f"unknown report format {format!r}; choose from {FORMATS}")
    text = RENDERERS[format](report)
    with _open(destination) as fh:
        fh.write(text)


def render_trace(trace) -> str:
    if not trace:
        raise ValueError("trace is empty")
    return "".join(f"{int(i)} {float(f):.17g}\n" for i, f in trace)


def emit_trace(result, destination) -> None:
    """Write ``iteration best-fitness`` lines, readable by gnuplot.

    For the hill climber the first column is the run index and the second
    the best fitness after that run.
    """
    trace = result.trace if hasattr(result, "trace") else result
    text = render_trace(trace)
    with _open(destination) as fh:
        fh.write(text)
