"""Published comparison numbers shipped with the package.

The data live in ``data/reference_tables.csv``; every row carries the table
and row label it was transcribed from.  Rows for algorithms that are not
implemented here are kept for display only.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

TOLERANCE_CLASSES = ("exact-count", "macroscopic-value", "tiny-residual", "statistical", "display")
ALGORITHMS = ("vso", "sahc", "other-published")


class ReferenceError(LookupError):
    """No reference row matches a (benchmark, nd, algorithm) triple."""


@dataclass(frozen=True)
class ReferenceEntry:
    table: str
    row: str
    benchmark: str
    nd: int
    algorithm: str
    source: str
    best_fitness: float
    n_eval: int | None
    tolerance_class: str
    lower: float | None = None
    upper: float | None = None
    n_eval_accept: tuple = ()
    note: str = ""

    @property
    def accepted_counts(self) -> tuple:
        if self.n_eval is None:
            return ()
        return (self.n_eval,) + tuple(c for c in self.n_eval_accept if c != self.n_eval)


def reference_text() -> str:
    return resources.files(__package__).joinpath("data/reference_tables.csv").read_text()


def reference_checksum() -> str:
    """SHA-256 of the shipped reference file."""
    return hashlib.sha256(reference_text().encode()).hexdigest()


def _opt_float(s):
    return float(s) if s.strip() else None


@lru_cache(maxsize=1)
def load_reference() -> tuple:
    lines = [ln for ln in reference_text().splitlines() if not ln.startswith("#")]
    out = []
    for rec in csv.DictReader(io.StringIO("\n".join(lines))):
        cls = rec["tolerance_class"]
        if cls not in TOLERANCE_CLASSES:
            raise ValueError(f"unknown tolerance class {cls!r} in row {rec['row']}")
        if rec["algorithm"] not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {rec['algorithm']!r}")
        accept = tuple(int(c) for c in rec["n_eval_accept"].split("|") if c)
        out.append(
            ReferenceEntry(
                table=rec["table"],
                row=rec["row"],
                benchmark=rec["benchmark"],
                nd=int(rec["nd"]),
                algorithm=rec["algorithm"],
                source=rec["source"],
                best_fitness=float(rec["best_fitness"]),
                n_eval=int(rec["n_eval"]) if rec["n_eval"] else None,
                tolerance_class=cls,
                lower=_opt_float(rec["lower"]),
                upper=_opt_float(rec["upper"]),
                n_eval_accept=accept,
                note=rec["note"],
            )
        )
    return tuple(out)


def find_reference(benchmark: str, nd: int, algorithm: str) -> ReferenceEntry:
    hits = [
        e
        for e in load_reference()
        if e.benchmark == benchmark and e.nd == nd and e.algorithm == algorithm
    ]
    if not hits:
        raise ReferenceError(f"no reference row for {benchmark} nd={nd} algorithm={algorithm}")
    return hits[0]


def display_rows(benchmark: str, nd: int) -> list:
    """Published numbers for algorithms not implemented in this package."""
    return [
        e
        for e in load_reference()
        if e.benchmark == benchmark and e.nd == nd and e.algorithm == "other-published"
    ]
