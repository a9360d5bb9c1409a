"""Command line front end.

    vsopt run --algo vso --suite gso
    vsopt run --algo sahc --suite gso --fn f14 --emit markdown
    vsopt run --algo vso --external-cmd "./solver --quiet" \\
        --external-in cand.txt --external-out fit.txt --bounds=-1:1 --nd 3

Exit status: 0 when every judged row passes, 1 when any row fails, 2 on a
configuration or I/O error.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from dataclasses import replace
from pathlib import Path

from ..benchmarks import BenchmarkError
from ..external import SubprocessObjectiveSpec, subprocess_objective
from ..sahc import DEFAULT_SEED, SahcConfig, run_sahc
from ..space import EvaluationError, SpaceError, make_decision_space
from ..vso import ConfigError, VsoConfig, run_vso
from .report import FORMATS, emit_report, emit_trace
from .suite import SuiteReport, SuiteRow, Verdict, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vsopt", description="Run VSO or SAHC on benchmark suites.")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a suite, a single function or an external objective")
    r.add_argument("--algo", choices=("vso", "sahc"), default="vso")
    r.add_argument("--suite", choices=("vpso", "gso", "all"), default="gso")
    r.add_argument("--fn", help="single function id, e.g. f8, gso/f8, rastrigin")
    r.add_argument("--nd", type=int, help="dimension (v-PSO: 10, 20 or 30; default 30)")
    r.add_argument("--seed", type=int, default=DEFAULT_SEED, help="root seed for SAHC and noisy f7")
    r.add_argument("--rho", type=float, help="VSO step fraction toward the best point (default 0.5)")
    r.add_argument("--runs", type=int, help="SAHC run count (default 1000)")
    r.add_argument("--reset-per-run", action="store_true", help="SAHC: fresh best record every run")
    r.add_argument("--emit", choices=FORMATS, default="csv")
    r.add_argument("--out", help="report path (default stdout)")
    r.add_argument("--trace", help="trace file, or directory when several rows are run")
    ext = r.add_argument_group("external objective")
    ext.add_argument("--external-cmd", help="command line of the external evaluator")
    ext.add_argument("--external-in", default="candidate.txt", help="coordinate file written per call")
    ext.add_argument("--external-out", default="fitness.txt", help="fitness file read per call")
    ext.add_argument("--external-timeout", type=float, default=60.0)
    ext.add_argument("--snapshot-best", help="copy of the input file for the best point so far")
    ext.add_argument(
        "--bounds",
        help="box as LO:HI[,LO:HI...]; write --bounds=-1:1 for a negative LO; one pair is repeated --nd times",
    )
    return p


def _configs(args):
    vcfg = VsoConfig() if args.rho is None else VsoConfig(rho=args.rho)
    scfg = SahcConfig(seed=args.seed)
    if args.runs is not None:
        scfg = replace(scfg, num_runs=args.runs)
    if args.reset_per_run:
        scfg = replace(scfg, global_best_across_runs=False)
    return vcfg, scfg


def parse_bounds(text, nd):
    try:
        pairs = [tuple(float(v) for v in item.split(":")) for item in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --bounds {text!r}: {exc}") from None
    if any(len(p) != 2 for p in pairs):
        raise UsageError(f"bad --bounds {text!r}: expected LO:HI pairs")
    if len(pairs) == 1:
        pairs = pairs * (nd or 1)
    elif nd is not None and nd != len(pairs):
        raise UsageError(f"--nd {nd} disagrees with {len(pairs)} bound pairs")
    return make_decision_space([p[0] for p in pairs], [p[1] for p in pairs])


def _external_report(args, vcfg, scfg) -> SuiteReport:
    if not args.bounds:
        raise UsageError("--external-cmd needs --bounds")
    ds = parse_bounds(args.bounds, args.nd)
    spec = SubprocessObjectiveSpec(
        command=shlex.split(args.external_cmd),
        input_path=Path(args.external_in),
        output_path=Path(args.external_out),
        timeout=args.external_timeout,
        best_artifact_path=Path(args.snapshot_best) if args.snapshot_best else None,
    )
    obj = subprocess_objective(spec)
    config = {"algorithm": args.algo, "command": args.external_cmd, "seed": args.seed}
    report = SuiteReport("external", args.algo, args.seed, config)
    result, error = None, ""
    try:
        result = run_vso(obj, ds, vcfg) if args.algo == "vso" else run_sahc(obj, ds, scfg)
        verdict = Verdict("n/a", reason="external objective")
    except EvaluationError as exc:
        error = f"{type(exc).__name__}: {exc}"
        verdict = Verdict("fail", reason=error)
    report.rows.append(
        SuiteRow("external", ds.nd, args.algo, float("nan"), float("nan"), result, None, verdict, error)
    )
    return report


def _write_traces(report, dest):
    rows = [r for r in report.rows if r.result is not None]
    if not rows:
        return
    dest = Path(dest)
    if len(report.rows) == 1:
        emit_trace(rows[0].result, dest)
        return
    dest.mkdir(parents=True, exist_ok=True)
    for row in rows:
        emit_trace(row.result, dest / f"{row.benchmark.replace('/', '_')}_nd{row.nd}.dat")


def cmd_run(args) -> int:
    vcfg, scfg = _configs(args)
    if args.external_cmd:
        report = _external_report(args, vcfg, scfg)
    else:
        report = run_suite(
            args.suite,
            args.algo,
            fn=args.fn,
            nd=args.nd,
            seed=args.seed,
            vso_config=vcfg,
            sahc_config=scfg,
        )
    emit_report(report, args.emit, args.out)
    if args.trace:
        _write_traces(report, args.trace)
    c = report.counts
    print(f"{c['pass']} pass, {c['fail']} fail, {c['n/a']} n/a", file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return cmd_run(args)
    except (UsageError, ConfigError, SpaceError, BenchmarkError, EvaluationError, ValueError, OSError) as exc:
        print(f"vsopt: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
