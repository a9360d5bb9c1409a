"""Objective functions backed by an external program.

File protocol, one evaluation per program run:

1. the candidate's coordinates are written to ``input_path``, one per line,
   as ``%.17g`` decimal text (exact round trip for doubles);
2. any stale ``output_path`` is removed and ``command`` is run to
   completion;
3. the first line of ``output_path`` is parsed as the fitness.

Programs like NEC use fixed file names, so these objectives are never
evaluated concurrently (``vectorized`` is False and engines scan serially).
"""

from __future__ import annotations

import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .space import EvaluationError


class ExternalEvaluationError(EvaluationError):
    """Base class; ``stdout``/``stderr``/``returncode`` hold what was captured."""

    kind = "external"

    def __init__(self, message, stdout="", stderr="", returncode=None):
        super().__init__(message)
        self.stdout = stdout
        self.stderr = stderr
        self.returncode = returncode


class SpawnError(ExternalEvaluationError):
    kind = "spawn failure"


class NonzeroExitError(ExternalEvaluationError):
    kind = "nonzero exit"


class EvaluationTimeout(ExternalEvaluationError):
    kind = "timeout"


class MissingOutputError(ExternalEvaluationError):
    kind = "missing output"


class UnparsableOutputError(ExternalEvaluationError):
    kind = "unparsable output"


@dataclass(frozen=True)
class SubprocessObjectiveSpec:
    command: Sequence[str]
    input_path: Path
    output_path: Path
    timeout: float = 60.0
    best_artifact_path: Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "command", tuple(str(c) for c in self.command))
        object.__setattr__(self, "input_path", Path(self.input_path))
        object.__setattr__(self, "output_path", Path(self.output_path))
        if self.best_artifact_path is not None:
            object.__setattr__(self, "best_artifact_path", Path(self.best_artifact_path))
        if not self.command:
            raise ValueError("command must not be empty")
        if self.input_path.resolve() == self.output_path.resolve():
            raise ValueError("input_path and output_path must differ")
        if not self.timeout > 0:
            raise ValueError("timeout must be positive")


def write_coordinates(path, x) -> None:
    text = "".join(f"{v:.17g}\n" for v in np.asarray(x, dtype=float).reshape(-1))
    Path(path).write_text(text)


def read_coordinates(path) -> np.ndarray:
    return np.array([float(line) for line in Path(path).read_text().split()])


class SubprocessObjective:
    vectorized = False
    concurrent_safe = False  # fixed file names; engines evaluate serially

    def __init__(self, spec: SubprocessObjectiveSpec):
        self.spec = spec
        self.invocations = 0

    def __call__(self, x) -> float:
        spec = self.spec
        write_coordinates(spec.input_path, x)
        spec.output_path.unlink(missing_ok=True)
        self.invocations += 1
        try:
            proc = subprocess.run(
                spec.command,
                capture_output=True,
                text=True,
                timeout=spec.timeout,
            )
        except subprocess.TimeoutExpired as exc:
            raise EvaluationTimeout(
                f"{spec.command[0]} timed out after {spec.timeout} s",
                stdout=_text(exc.stdout),
                stderr=_text(exc.stderr),
            ) from exc
        except OSError as exc:
            raise SpawnError(f"cannot run {spec.command[0]}: {exc}") from exc

        if proc.returncode != 0:
            raise NonzeroExitError(
                f"{spec.command[0]} exited with status {proc.returncode}",
                stdout=proc.stdout,
                stderr=proc.stderr,
                returncode=proc.returncode,
            )
        if not spec.output_path.exists():
            raise MissingOutputError(
                f"missing output: {spec.output_path} not written",
                stdout=proc.stdout,
                stderr=proc.stderr,
                returncode=0,
            )
        lines = spec.output_path.read_text().splitlines()
        try:
            return float(lines[0].strip())
        except (IndexError, ValueError) as exc:
            head = lines[0] if lines else ""
            raise UnparsableOutputError(
                f"cannot parse fitness from {spec.output_path}: {head!r}",
                stdout=proc.stdout,
                stderr=proc.stderr,
                returncode=0,
            ) from exc

    def on_best(self) -> None:
        # called by the engines right after the best record moves to the
        # point just evaluated, so input_path still holds that point
        if self.spec.best_artifact_path is not None:
            shutil.copyfile(self.spec.input_path, self.spec.best_artifact_path)


def subprocess_objective(spec: SubprocessObjectiveSpec) -> SubprocessObjective:
    exe = spec.command[0]
    if shutil.which(exe) is None and not Path(exe).is_file():
        raise SpawnError(f"command not found: {exe}")
    return SubprocessObjective(spec)


def _text(b):
    if b is None:
        return ""
    return b.decode(errors="replace") if isinstance(b, bytes) else b
