"""Suite runner, reference comparison, report writers and CLI."""

from .reference import (
    ReferenceEntry,
    ReferenceError,
    display_rows,
    find_reference,
    load_reference,
    reference_checksum,
)
from .report import emit_report, emit_trace, render_csv, render_jsonl, render_markdown
from .suite import (
    SuiteReport,
    SuiteRow,
    Verdict,
    compare_reference,
    judge,
    macroscopic_tolerance,
    run_suite,
)

__all__ = [
    "ReferenceEntry",
    "ReferenceError",
    "SuiteReport",
    "SuiteRow",
    "Verdict",
    "compare_reference",
    "display_rows",
    "emit_report",
    "emit_trace",
    "find_reference",
    "judge",
    "load_reference",
    "macroscopic_tolerance",
    "reference_checksum",
    "render_csv",
    "render_jsonl",
    "render_markdown",
    "run_suite",
]
