"""Very Simple Optimization (VSO), a multi-run hill climber, and the benchmark suites used to compare them."""

from .benchmarks import BenchmarkError, BenchmarkSpec, lookup, registry, suite_ids
from .external import (
    EvaluationTimeout,
    MissingOutputError,
    NonzeroExitError,
    SpawnError,
    SubprocessObjectiveSpec,
    UnparsableOutputError,
    subprocess_objective,
)
from .sahc import DEFAULT_SEED, SahcConfig, run_sahc
from .space import (
    BestRecord,
    DecisionSpace,
    EvaluationError,
    PointSet,
    RunResult,
    SpaceError,
    make_decision_space,
    principal_diagonal_point,
)
from .vso import ConfigError, VsoConfig, build_ispd, gamma_schedule, reposition, run_vso

__version__ = "0.1.0"

__all__ = [
    "BenchmarkError",
    "BenchmarkSpec",
    "BestRecord",
    "ConfigError",
    "DEFAULT_SEED",
    "DecisionSpace",
    "EvaluationError",
    "EvaluationTimeout",
    "MissingOutputError",
    "NonzeroExitError",
    "PointSet",
    "RunResult",
    "SahcConfig",
    "SpaceError",
    "SpawnError",
    "SubprocessObjectiveSpec",
    "UnparsableOutputError",
    "VsoConfig",
    "build_ispd",
    "gamma_schedule",
    "lookup",
    "make_decision_space",
    "principal_diagonal_point",
    "registry",
    "reposition",
    "run_sahc",
    "run_vso",
    "subprocess_objective",
    "suite_ids",
]
