"""Very Simple Optimization: deterministic probe-line start, elitist midpoint moves."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .space import (
    BestRecord,
    DecisionSpace,
    PointSet,
    RunResult,
    SaturationState,
    evaluate_and_update,
    exact_fraction,
    lerp_exact,
    principal_diagonal_point,
)

GAMMA_BAND_LOW = (0.05, 0.49)
GAMMA_BAND_HIGH = (0.51, 0.95)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class VsoConfig:
    rho: float = 0.5
    points_per_dim: int = 14
    num_gammas: int = 10
    max_iterations: int = 15
    saturation_tol: float = 0.001
    saturation_period: int = 3
    gamma_band_low: tuple = GAMMA_BAND_LOW
    gamma_band_high: tuple = GAMMA_BAND_HIGH

    def __post_init__(self):
        if self.points_per_dim < 2 or self.points_per_dim % 2:
            raise ConfigError("points_per_dim must be even and >= 2")
        if self.num_gammas < 2 or self.num_gammas % 2:
            raise ConfigError("num_gammas must be even and >= 2")
        if not 0.0 <= self.rho <= 1.0:
            raise ConfigError("rho must lie in [0, 1]")
        if self.saturation_tol < 0:
            raise ConfigError("saturation_tol must be >= 0")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be >= 1")
        if self.saturation_period < 1:
            raise ConfigError("saturation_period must be >= 1")

    def num_points(self, nd: int) -> int:
        return self.points_per_dim * nd * self.num_gammas


def _gamma_fractions(num_gammas, band_low=GAMMA_BAND_LOW, band_high=GAMMA_BAND_HIGH):
    if num_gammas % 2 or num_gammas < 2:
        raise ConfigError(f"number of gammas must be an even number >= 2, got {num_gammas}")
    half = num_gammas // 2
    lows = [exact_fraction(v) for v in band_low]
    highs = [exact_fraction(v) for v in band_high]
    if half == 1:
        return [lows[0], highs[1]]
    out = []
    for lo, hi in (lows, highs):
        step = (hi - lo) / (half - 1)
        out.extend(lo + k * step for k in range(half))
    return out


def gamma_schedule(num_gammas: int, band_low=GAMMA_BAND_LOW, band_high=GAMMA_BAND_HIGH):
    """Diagonal fractions for the probe-line crossings.

    Half the values are spaced evenly over ``band_low`` and half over
    ``band_high``, both endpoints included.  With two gammas (one per band)
    the outer endpoints are used, so the schedule stays symmetric about 0.5.
    Spacing is done in exact decimal arithmetic, so the default schedule is
    exactly 0.05, 0.16, ..., 0.95 as written.
    """
    return np.array([float(g) for g in _gamma_fractions(num_gammas, band_low, band_high)])


def build_ispd(ds: DecisionSpace, cfg: VsoConfig) -> PointSet:
    """Initial points on axis-parallel probe lines through diagonal points.

    One block of ``points_per_dim * nd`` points per gamma.  Every point in
    the block starts at the diagonal point for that gamma; point ``k`` of
    line ``i`` then has coordinate ``i`` spread evenly from ``mins[i]`` to
    ``maxs[i]``.  All coordinates are correctly rounded, so the layout is
    exactly symmetric in a symmetric box and the line ends hit the bounds.
    """
    gammas = _gamma_fractions(cfg.num_gammas, cfg.gamma_band_low, cfg.gamma_band_high)
    nd, m = ds.nd, cfg.points_per_dim
    block = m * nd
    lines = np.array(
        [[lerp_exact(ds.mins[i], ds.maxs[i], Fraction(k, m - 1)) for k in range(m)] for i in range(nd)]
    )
    R = np.empty((block * len(gammas), nd))
    for g, gamma in enumerate(gammas):
        B = R[g * block : (g + 1) * block]
        B[:] = principal_diagonal_point(ds, gamma)
        for i in range(nd):
            B[i * m : (i + 1) * m, i] = lines[i]
    return PointSet(R, 0)


def reposition(points: PointSet, rstar, rho: float) -> PointSet:
    """Move every point a fraction ``rho`` of the way towards ``rstar``."""
    rstar = np.asarray(rstar, dtype=float)
    R = points.positions
    if rstar.shape != (R.shape[1],):
        raise ValueError(f"rstar has shape {rstar.shape}, expected ({R.shape[1]},)")
    if not 0.0 <= rho <= 1.0:
        raise ConfigError("rho must lie in [0, 1]")
    if rho == 1.0:
        moved = np.broadcast_to(rstar, R.shape).copy()
    else:
        moved = R + rho * (rstar - R)
    return PointSet(moved, points.iteration + 1)


def run_vso(objective, ds: DecisionSpace, cfg: VsoConfig | None = None) -> RunResult:
    """Run VSO to saturation or ``max_iterations``.

    ``objective`` maps a coordinate vector to a fitness to be maximized, or,
    if it has ``vectorized = True``, an ``(n, nd)`` array to ``n`` values.
    """
    cfg = cfg or VsoConfig()
    t0 = time.perf_counter()
    pts = build_ispd(ds, cfg)
    n = pts.np
    best = BestRecord()
    sat = SaturationState()

    _, improved = evaluate_and_update(objective, pts.positions, best, 0)
    n_eval = n
    if improved:
        sat.reset(best.fstar)
    trace = [(0, best.fstar)]

    j = 0
    for j in range(1, cfg.max_iterations + 1):
        pts = reposition(pts, best.rstar, cfg.rho)
        evaluate_and_update(objective, pts.positions, best, j)
        n_eval += n
        trace.append((j, best.fstar))
        if j % cfg.saturation_period == 0 and sat.shift(best.fstar, cfg.saturation_tol):
            break

    return RunResult(
        best=best,
        n_eval=n_eval,
        last_iteration=j,
        trace=trace,
        wall_time=time.perf_counter() - t0,
        num_points=n,
    )


__all__ = [
    "ConfigError",
    "VsoConfig",
    "build_ispd",
    "gamma_schedule",
    "reposition",
    "run_vso",
]
