"""Decision-space geometry and the run bookkeeping shared by both engines."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


class SpaceError(ValueError):
    """Raised when a decision space cannot be constructed."""


class EvaluationError(RuntimeError):
    """An objective evaluation failed inside an engine run.

    ``point`` and ``iteration`` locate the failing evaluation (``point`` is
    ``None`` when a vectorized objective failed on a whole batch); ``run`` is
    set by the multi-run hill climber.
    """

    def __init__(self, message, point=None, iteration=None, run=None):
        super().__init__(message)
        self.point = point
        self.iteration = iteration
        self.run = run


@dataclass(frozen=True)
class DecisionSpace:
    """Axis-aligned box ``mins[i] <= x[i] <= maxs[i]``."""

    mins: np.ndarray
    maxs: np.ndarray

    @property
    def nd(self) -> int:
        return self.mins.shape[0]

    @property
    def diag_length(self) -> float:
        return math.sqrt(float(np.sum((self.maxs - self.mins) ** 2)))

    @property
    def widths(self) -> np.ndarray:
        return self.maxs - self.mins

    def contains(self, points) -> bool:
        points = np.asarray(points, dtype=float)
        return bool(np.all(points >= self.mins) and np.all(points <= self.maxs))


def make_decision_space(mins, maxs) -> DecisionSpace:
    lo = np.array(mins, dtype=float).reshape(-1)
    hi = np.array(maxs, dtype=float).reshape(-1)
    if lo.size == 0 or hi.size == 0:
        raise SpaceError("empty bound vectors")
    if lo.size != hi.size:
        raise SpaceError(f"dimension mismatch: {lo.size} mins vs {hi.size} maxs")
    for i, (a, b) in enumerate(zip(lo, hi)):
        if not (np.isfinite(a) and np.isfinite(b)):
            raise SpaceError(f"non-finite bound at index {i}")
        if a >= b:
            raise SpaceError(f"degenerate bound at index {i}: min {a!r} >= max {b!r}")
    lo.setflags(write=False)
    hi.setflags(write=False)
    return DecisionSpace(lo, hi)


def exact_fraction(value) -> Fraction:
    """``value`` as a rational, reading floats as their shortest decimal form.

    So ``0.95`` means 19/20 rather than the binary value just below it.
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(repr(float(value)))


def lerp_exact(lo: float, hi: float, t) -> float:
    """Nearest double to ``lo + t * (hi - lo)`` computed without rounding error."""
    a = Fraction(float(lo))
    return float(a + exact_fraction(t) * (Fraction(float(hi)) - a))


def principal_diagonal_point(ds: DecisionSpace, gamma) -> np.ndarray:
    """Point ``mins + gamma * (maxs - mins)`` on the principal diagonal.

    Each coordinate is correctly rounded, so ``gamma = 1`` gives ``maxs``
    exactly and ``gamma`` and ``1 - gamma`` give mirror-image points in a
    symmetric box.
    """
    g = exact_fraction(gamma)
    if not 0 <= g <= 1:
        raise SpaceError(f"gamma must lie in [0, 1], got {gamma!r}")
    return np.array([lerp_exact(a, b, g) for a, b in zip(ds.mins, ds.maxs)])


@dataclass(frozen=True)
class PointSet:
    positions: np.ndarray  # (Np, Nd)
    iteration: int = 0

    @property
    def np(self) -> int:
        return self.positions.shape[0]


@dataclass
class BestRecord:
    fstar: float = -math.inf
    rstar: np.ndarray | None = None
    found_at_point: int = -1
    found_at_iteration: int = -1
    found_in_run: int = 0


@dataclass
class RunResult:
    best: BestRecord
    n_eval: int
    last_iteration: int
    trace: list = field(default_factory=list)  # (iteration, F*) pairs
    wall_time: float = 0.0
    num_points: int = 0
    runs: list = field(default_factory=list)  # per-run summaries (hill climber only)


@dataclass
class SaturationState:
    """Two-register saturation test checked every ``period`` iterations."""

    fbest1: float = -math.inf
    fbest2: float = -math.inf

    def reset(self, fstar: float) -> None:
        self.fbest1 = fstar
        self.fbest2 = -math.inf

    def shift(self, fstar: float, tol: float) -> bool:
        """Shift registers and report whether the run has saturated."""
        self.fbest1 = self.fbest2
        self.fbest2 = fstar
        return self.fbest2 - self.fbest1 <= tol


def evaluate_and_update(objective, positions, best, iteration, on_update=None):
    """Evaluate every row of ``positions`` and fold results into ``best``.

    The scan is in ascending row order with a ``>=`` rule, so a later point of
    equal fitness replaces the incumbent.  Vectorized objectives (those with a
    truthy ``vectorized`` attribute) are evaluated in one batch and reduced to
    the same outcome as the serial scan.  Returns ``(values, improved)`` where
    ``improved`` tells whether the best record was replaced at least once.
    """
    n = positions.shape[0]
    if getattr(objective, "vectorized", False):
        try:
            values = np.asarray(objective(positions), dtype=float).reshape(n)
        except EvaluationError:
            raise
        except Exception as exc:  # noqa: BLE001 - rewrapped with context
            raise EvaluationError(
                f"objective failed at iteration {iteration}: {exc}", iteration=iteration
            ) from exc
        # NaN never wins a >= comparison in the serial scan, so skip it here too
        finite = values[~np.isnan(values)]
        top = finite.max() if finite.size else np.nan
        if top >= best.fstar:
            p = int(np.flatnonzero(values == top)[-1])
            best.fstar = float(top)
            best.rstar = positions[p].copy()
            best.found_at_point = p
            best.found_at_iteration = iteration
            if on_update is not None:
                on_update(best)
            return values, True
        return values, False

    values = np.empty(n)
    improved = False
    for p in range(n):
        try:
            values[p] = float(objective(positions[p]))
        except EvaluationError as exc:
            exc.point, exc.iteration = p, iteration
            raise
        except Exception as exc:  # noqa: BLE001
            raise EvaluationError(
                f"objective failed at point {p}, iteration {iteration}: {exc}",
                point=p,
                iteration=iteration,
            ) from exc
        if values[p] >= best.fstar:
            best.fstar = values[p]
            best.rstar = positions[p].copy()
            best.found_at_point = p
            best.found_at_iteration = iteration
            improved = True
            hook = getattr(objective, "on_best", None)
            if hook is not None:
                hook()
            if on_update is not None:
                on_update(best)
    return values, improved
