"""Suite execution and verdicts against the published numbers."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace

from ..benchmarks import BenchmarkError, lookup, suite_ids
from ..sahc import DEFAULT_SEED, SahcConfig, noise_stream, run_sahc
from ..space import RunResult
from ..vso import VsoConfig, run_vso
from .reference import ReferenceEntry, ReferenceError, find_reference

VPSO_DIMENSIONS = (10, 20, 30)
ALGORITHMS = ("vso", "sahc")
SUITES = ("vpso", "gso", "all")

# statistical rows: accepted relative deviation of a hill-climber count
SAHC_COUNT_REL_TOL = 0.05


@dataclass
class Verdict:
    verdict: str  # pass | fail | n/a
    value_ok: bool | None = None
    count_ok: bool | None = None
    deviation: float | None = None  # best - published
    count_deviation: int | None = None  # n_eval - published
    reason: str = ""


@dataclass
class SuiteRow:
    benchmark: str
    nd: int
    algorithm: str
    fmax: float
    fmax_published: float
    result: RunResult | None
    reference: ReferenceEntry | None
    verdict: Verdict
    error: str = ""

    @property
    def best(self) -> float:
        return self.result.best.fstar if self.result else math.nan

    @property
    def n_eval(self) -> int | None:
        return self.result.n_eval if self.result else None


@dataclass
class SuiteReport:
    suite: str
    algorithm: str
    seed: int
    config: dict
    rows: list = field(default_factory=list)
    timestamp: str = ""

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "n/a": 0}
        for r in self.rows:
            out[r.verdict.verdict] += 1
        return out

    @property
    def all_passed(self) -> bool:
        return self.counts["fail"] == 0


def macroscopic_tolerance(published: float) -> float:
    return max(1e-6, 1e-3 * abs(published))


def judge(best: float, n_eval: int | None, ref: ReferenceEntry, fmax: float, count_floor=None) -> Verdict:
    """Verdict for one measured ``(best, n_eval)`` pair; a pure function.

    Deterministic rows must match the published count (or a listed
    alternative) exactly.  Hill-climber counts must lie within
    ``SAHC_COUNT_REL_TOL`` of the published count and, when given, at or
    above ``count_floor``.
    """
    cls = ref.tolerance_class
    if cls == "display":
        return Verdict("n/a", reason="display-only row")
    dev = best - ref.best_fitness
    if math.isnan(best):
        value_ok = False
    elif cls == "macroscopic-value":
        value_ok = abs(dev) <= macroscopic_tolerance(ref.best_fitness)
    elif cls == "tiny-residual":
        value_ok = abs(best - fmax) <= 1e-10
    elif cls == "statistical":
        value_ok = ref.lower <= best <= ref.upper
    else:
        value_ok = None

    count_ok = count_dev = None
    if ref.n_eval is not None:
        if n_eval is None:
            count_ok = False
        else:
            count_dev = n_eval - ref.n_eval
            if ref.algorithm == "sahc":
                count_ok = abs(count_dev) <= SAHC_COUNT_REL_TOL * ref.n_eval
            else:
                count_ok = n_eval in ref.accepted_counts
    if count_floor is not None and n_eval is not None and n_eval < count_floor:
        count_ok = False

    reasons = []
    if value_ok is False:
        reasons.append(f"best {best!r} outside {cls} tolerance of {ref.best_fitness!r}")
    if count_ok is False:
        reasons.append(f"n_eval {n_eval} vs published {ref.n_eval}")
    ok = value_ok is not False and count_ok is not False
    return Verdict("pass" if ok else "fail", value_ok, count_ok, dev, count_dev, "; ".join(reasons))


def sahc_count_floor(result: RunResult, runs: int) -> int:
    """Every run does at least its initial scan plus three tweak iterations."""
    return runs * result.num_points * 4


def _entries(suite, fn, nd):
    if suite not in SUITES:
        raise BenchmarkError(f"unknown suite {suite!r}")
    ids = suite_ids(suite)
    if fn is not None:
        full = fn if "/" in fn else (f"gso/{fn}" if suite == "gso" else f"vpso/{fn}")
        if full not in ids:
            raise BenchmarkError(f"unknown function id {fn!r} for suite {suite!r}")
        ids = (full,)
    out = []
    for bid in ids:
        spec = lookup(bid)
        if spec.id.startswith("vpso/"):
            d = 30 if nd is None else nd
            if d not in VPSO_DIMENSIONS:
                raise BenchmarkError(f"v-PSO suite runs at nd in {VPSO_DIMENSIONS}, got {d}")
        elif spec.nd_fixed or nd is None:
            d = spec.nd_default
        else:
            d = nd
        spec._nd(d)
        out.append((spec, d))
    return out


def run_suite(
    suite: str,
    algo: str,
    *,
    fn: str | None = None,
    nd: int | None = None,
    seed: int = DEFAULT_SEED,
    vso_config: VsoConfig | None = None,
    sahc_config: SahcConfig | None = None,
) -> SuiteReport:
    """Run every entry of ``suite`` with ``algo`` and judge it.

    ``nd`` selects the v-PSO dimension (default 30) and resizes the
    variable-dimension GSO functions; fixed-dimension functions ignore it.
    Rows run with non-default settings (other than the seed) or at a
    dimension without published numbers get an ``n/a`` verdict.  A run that
    raises becomes a failed row, so the report always has one row per entry.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    entries = _entries(suite, fn, nd)
    vcfg = vso_config or VsoConfig()
    scfg = replace(sahc_config or SahcConfig(), seed=seed)
    defaults = vcfg == VsoConfig() if algo == "vso" else replace(scfg, seed=DEFAULT_SEED) == SahcConfig()
    config = {"algorithm": algo, "seed": seed, "nd": nd, "fn": fn}
    config.update(vars(vcfg) if algo == "vso" else vars(scfg))
    report = SuiteReport(suite, algo, seed, config, timestamp=time.strftime("%Y-%m-%dT%H:%M:%S"))

    for spec, d in entries:
        fmax = spec.fmax_at(d)
        try:
            ref = find_reference(spec.id, d, algo)
        except ReferenceError:
            ref = None
        result, error = None, ""
        try:
            obj = spec.objective(d, noise_stream(seed) if not spec.deterministic else None)
            ds = spec.space(d)
            result = run_vso(obj, ds, vcfg) if algo == "vso" else run_sahc(obj, ds, scfg)
        except Exception as exc:  # noqa: BLE001 - reported as a failed row
            error = f"{type(exc).__name__}: {exc}"

        if error:
            verdict = Verdict("fail", reason=error)
        elif ref is None:
            verdict = Verdict("n/a", reason="no published reference for this entry")
        elif not defaults:
            verdict = Verdict("n/a", reason="non-default configuration")
        else:
            floor = sahc_count_floor(result, scfg.num_runs) if algo == "sahc" else None
            verdict = judge(result.best.fstar, result.n_eval, ref, fmax, floor)
        report.rows.append(
            SuiteRow(spec.id, d, algo, fmax, spec.fmax_published_at(d), result, ref, verdict, error)
        )
    return report


def compare_reference(report: SuiteReport) -> list:
    """Recompute the verdict of every row from its result and reference.

    Raises ``ReferenceError`` for a row that has a result but no reference.
    """
    out = []
    for row in report.rows:
        if row.result is None:
            out.append(Verdict("fail", reason=row.error))
            continue
        ref = row.reference or find_reference(row.benchmark, row.nd, row.algorithm)
        floor = None
        if row.algorithm == "sahc":
            floor = sahc_count_floor(row.result, len(row.result.runs))
        out.append(judge(row.best, row.n_eval, ref, row.fmax, floor))
    return out
