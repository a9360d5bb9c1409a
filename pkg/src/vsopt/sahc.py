"""Steepest-ascent hill climbing with replacement, multi-run driver.

Random numbers come from numpy's PCG64.  One root seed feeds a
``SeedSequence``; run ``r`` draws from the child stream with spawn key
``(1, r)`` and benchmark noise (gso/f7) from spawn key ``(0,)``, so results
depend only on the seed and not on platform or run scheduling.
"""

from __future__ import annotations

import copy
import time
from dataclasses import dataclass

import numpy as np

from .space import (
    BestRecord,
    DecisionSpace,
    EvaluationError,
    PointSet,
    RunResult,
    SaturationState,
    evaluate_and_update,
)
from .vso import ConfigError

DEFAULT_SEED = 20130702


def run_stream(seed: int, run: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(1, run))))


def noise_stream(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(0,))))


@dataclass(frozen=True)
class SahcConfig:
    points_per_dim: int = 140
    num_runs: int = 1000
    max_iterations: int = 15
    saturation_tol: float = 0.001
    saturation_period: int = 3
    init_band: tuple = (0.05, 0.95)
    tweak_scale: float = 0.1
    seed: int = DEFAULT_SEED
    # True: best record and saturation registers carry over between runs
    global_best_across_runs: bool = True

    def __post_init__(self):
        lo, hi = self.init_band
        if not 0.0 <= lo <= hi <= 1.0:
            raise ConfigError("init_band must satisfy 0 <= lo <= hi <= 1")
        if self.tweak_scale < 0:
            raise ConfigError("tweak_scale must be >= 0")
        if self.points_per_dim < 1 or self.num_runs < 1 or self.max_iterations < 1:
            raise ConfigError("points_per_dim, num_runs and max_iterations must be >= 1")
        if self.saturation_period < 1:
            raise ConfigError("saturation_period must be >= 1")

    def num_points(self, nd: int) -> int:
        return self.points_per_dim * nd


def random_ispd(ds: DecisionSpace, np_: int, rng, band=(0.05, 0.95)) -> PointSet:
    """``np_`` points with every coordinate at ``min + r * (max - min)``.

    ``r`` is uniform on ``band``; draws are taken point-major.
    """
    if np_ < 1:
        raise ConfigError("need at least one point")
    lo, hi = band
    r = lo + (hi - lo) * np.asarray(rng.random((np_, ds.nd)), dtype=float)
    return PointSet(ds.mins + r * ds.widths, 0)


def tweak(points: PointSet, ds: DecisionSpace, rng, scale: float = 0.1) -> PointSet:
    """Perturb each coordinate by ``U[-scale, scale) * L_diag`` and clamp to the box."""
    R = points.positions
    r = -scale + 2.0 * scale * np.asarray(rng.random(R.shape), dtype=float)
    moved = np.minimum(np.maximum(R + r * ds.diag_length, ds.mins), ds.maxs)
    return PointSet(moved, points.iteration + 1)


def _one_run(objective, ds, cfg, rng, best, sat, run):
    """Run one climb, folding into ``best``/``sat``; return (n_eval, last_iteration)."""
    def mark(rec):
        rec.found_in_run = run

    n = cfg.num_points(ds.nd)
    try:
        pts = random_ispd(ds, n, rng, cfg.init_band)
        _, improved = evaluate_and_update(objective, pts.positions, best, 0, mark)
        n_eval = n
        if improved:
            sat.reset(best.fstar)
        j = 0
        for j in range(1, cfg.max_iterations + 1):
            pts = tweak(pts, ds, rng, cfg.tweak_scale)
            evaluate_and_update(objective, pts.positions, best, j, mark)
            n_eval += n
            if j % cfg.saturation_period == 0 and sat.shift(best.fstar, cfg.saturation_tol):
                break
    except EvaluationError as exc:
        exc.run = run
        raise
    return n_eval, j


def run_sahc(objective, ds: DecisionSpace, cfg: SahcConfig | None = None) -> RunResult:
    """Run ``cfg.num_runs`` hill climbs and return the best point over all of them.

    In the default (faithful) mode one best record and one pair of
    saturation registers are shared by every run: registers are only reset
    when a run's initial scan matches or beats the global best, so a run that
    starts no better than the incumbent usually stops at its first check.
    With ``global_best_across_runs=False`` each run starts from fresh state
    and the result is the maximum over runs.
    """
    cfg = cfg or SahcConfig()
    t0 = time.perf_counter()
    faithful = cfg.global_best_across_runs
    best = BestRecord()
    sat = SaturationState()
    n_eval = 0
    last = 0
    trace = []
    runs = []
    for run in range(cfg.num_runs):
        rng = run_stream(cfg.seed, run)
        if faithful:
            k, last = _one_run(objective, ds, cfg, rng, best, sat, run)
            run_best = best.fstar
        else:
            local = BestRecord()
            k, last = _one_run(objective, ds, cfg, rng, local, SaturationState(), run)
            run_best = local.fstar
            if local.fstar >= best.fstar:
                best = copy.deepcopy(local)
        n_eval += k
        trace.append((run, best.fstar))
        runs.append({"run": run, "n_eval": k, "last_iteration": last, "best": run_best})
    return RunResult(
        best=best,
        n_eval=n_eval,
        last_iteration=last,
        trace=trace,
        wall_time=time.perf_counter() - t0,
        num_points=cfg.num_points(ds.nd),
        runs=runs,
    )
