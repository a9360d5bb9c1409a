"""Benchmark objectives in maximization sense.

Two suites are provided:

* ``vpso/*``: the six n-dimensional functions used to compare against
  vibrational PSO (Ackley, cosine mixture, exponential, Griewank, Rastrigin,
  Schwefel), already written as maximization problems.
* ``gso/f1`` .. ``gso/f23``: the 23-function suite of Yao, Liu and Lin
  (1999), negated wherever the original is a minimization problem.

Every objective is vectorized: it takes an ``(n, nd)`` array of points and
returns ``n`` fitness values.  ``gso/f7`` additionally draws one uniform
``[0, 1)`` deviate per evaluation from a caller-supplied numpy ``Generator``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .space import DecisionSpace, make_decision_space


class BenchmarkError(ValueError):
    pass


# --------------------------------------------------------------------------
# constant tables

FOXHOLES_A = np.array(
    [
        [-32.0, -16.0, 0.0, 16.0, 32.0] * 5,
        [v for v in (-32.0, -16.0, 0.0, 16.0, 32.0) for _ in range(5)],
    ]
)

KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
KOWALIK_B = 1.0 / np.array([0.25, 0.50, 1.00, 2.00, 4.00, 6.00, 8.00, 10.0, 12.0, 14.0, 16.0])

HARTMAN_C = np.array([1.0, 1.2, 3.0, 3.2])

HARTMAN3_A = np.array(
    [
        [3.0, 10.0, 30.0],
        [0.1, 10.0, 35.0],
        [3.0, 10.0, 30.0],
        [0.1, 10.0, 35.0],
    ]
)
HARTMAN3_P = np.array(
    [
        [0.36890, 0.1170, 0.2673],
        [0.46990, 0.4387, 0.7470],
        [0.10910, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ]
)

HARTMAN6_A = np.array(
    [
        [10.0, 3.00, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.00, 3.50, 1.70, 10.0, 17.0, 8.0],
        [17.0, 8.00, 0.05, 10.0, 0.1, 14.0],
    ]
)
# row 3, column 2 is 0.1415 as in Yao et al. (1999), not the 0.1451 of
# later transcriptions; the published VSO f20 result depends on it.
HARTMAN6_P = np.array(
    [
        [0.13120, 0.1696, 0.5569, 0.01240, 0.8283, 0.5886],
        [0.23290, 0.4135, 0.8307, 0.37360, 0.1004, 0.9991],
        [0.23480, 0.1415, 0.3522, 0.28830, 0.3047, 0.6650],
        [0.40470, 0.8828, 0.8732, 0.57430, 0.1091, 0.0381],
    ]
)

SHEKEL_A = np.array(
    [
        [4.0, 4.0, 4.0, 4.0],
        [1.0, 1.0, 1.0, 1.0],
        [8.0, 8.0, 8.0, 8.0],
        [6.0, 6.0, 6.0, 6.0],
        [3.0, 7.0, 3.0, 7.0],
        [2.0, 9.0, 2.0, 9.0],
        [5.0, 5.0, 3.0, 3.0],
        [8.0, 1.0, 8.0, 1.0],
        [6.0, 2.0, 6.0, 2.0],
        [7.0, 3.6, 7.0, 3.6],
    ]
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def constant_tables() -> dict:
    """Copies of every constant table used by the fixed-dimension functions."""
    return {
        "foxholes_a": FOXHOLES_A.copy(),
        "kowalik_a": KOWALIK_A.copy(),
        "kowalik_b": KOWALIK_B.copy(),
        "hartman3": {"A": HARTMAN3_A.copy(), "c": HARTMAN_C.copy(), "P": HARTMAN3_P.copy()},
        "hartman6": {"A": HARTMAN6_A.copy(), "c": HARTMAN_C.copy(), "P": HARTMAN6_P.copy()},
        "shekel": {
            m: {"a": SHEKEL_A[:m].copy(), "c": SHEKEL_C[:m].copy()} for m in (5, 7, 10)
        },
    }


# --------------------------------------------------------------------------
# v-PSO suite


def vpso_ackley(X):
    nd = X.shape[1]
    s1 = np.sum(X**2, axis=1) / nd
    s2 = np.sum(np.cos(2.0 * math.pi * X), axis=1) / nd
    return 20.0 * np.exp(-0.2 * np.sqrt(s1)) + np.exp(s2) - 20.0 - math.e


def vpso_cosine_mixture(X):
    return -np.sum(X**2, axis=1) + 0.1 * np.sum(np.cos(5.0 * math.pi * X), axis=1)


def vpso_exponential(X):
    return np.exp(-0.5 * np.sum(X**2, axis=1))


def _griewank(Y):
    i = np.arange(1, Y.shape[1] + 1)
    return np.sum(Y**2, axis=1) / 4000.0 - np.prod(np.cos(Y / np.sqrt(i)), axis=1) + 1.0


def vpso_griewank(X):
    # unshifted: maximum 0 at the origin
    return -_griewank(X)


def _rastrigin(X):
    return np.sum(X**2 - 10.0 * np.cos(2.0 * math.pi * X) + 10.0, axis=1)


def vpso_rastrigin(X):
    return -_rastrigin(X)


def vpso_schwefel(X):
    nd = X.shape[1]
    return -418.9829 * nd + np.sum(X * np.sin(np.sqrt(np.abs(X))), axis=1)


# --------------------------------------------------------------------------
# GSO / Yao suite (negated)


def f1(X):
    return -np.sum(X**2, axis=1)


def f2(X):
    A = np.abs(X)
    return -(np.sum(A, axis=1) + np.prod(A, axis=1))


def f3(X):
    return -np.sum(np.cumsum(X, axis=1) ** 2, axis=1)


def f4(X):
    return -np.max(np.abs(X), axis=1)


def f5(X):
    """Rosenbrock variant ``-sum((100 (x[i+1] - x[i]^2)^2 + (x[i] - 1))^2)``.

    This is the form behind the published VSO/SAHC f5 numbers.  It shares
    the textbook function's maximum (0 at all-ones); see ``rosenbrock`` for
    the textbook form.
    """
    a, b = X[:, :-1], X[:, 1:]
    return -np.sum((100.0 * (b - a**2) ** 2 + (a - 1.0)) ** 2, axis=1)


def rosenbrock(X):
    a, b = X[:, :-1], X[:, 1:]
    return -np.sum(100.0 * (b - a**2) ** 2 + (a - 1.0) ** 2, axis=1)


def f6(X):
    return -np.sum(np.floor(X + 0.5) ** 2, axis=1)


def f7(X, noise):
    if noise is None:
        raise BenchmarkError("gso/f7 needs a noise stream")
    i = np.arange(1, X.shape[1] + 1)
    z = np.sum(i * X**4, axis=1)
    return -z - noise.random(X.shape[0])


def f8(X):
    return np.sum(X * np.sin(np.sqrt(np.abs(X))), axis=1)


def f9(X):
    return -_rastrigin(X)


def f10(X):
    nd = X.shape[1]
    s1 = np.sum(X**2, axis=1) / nd
    s2 = np.sum(np.cos(2.0 * math.pi * X), axis=1) / nd
    return -(-20.0 * np.exp(-0.2 * np.sqrt(s1)) - np.exp(s2) + 20.0 + math.e)


def f11(X):
    return -_griewank(X - 100.0)


def u(x, a, k, m):
    """Boundary penalty: ``k (|x| - a)^m`` outside ``[-a, a]``, else 0."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    hi = x > a
    lo = x < -a
    out[hi] = k * (x[hi] - a) ** m
    out[lo] = k * (-x[lo] - a) ** m
    return out if out.ndim else float(out)


def f12(X):
    nd = X.shape[1]
    Y = 1.0 + (X + 1.0) / 4.0
    s = 10.0 * np.sin(math.pi * Y[:, 0]) ** 2
    s = s + np.sum((Y[:, :-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(math.pi * Y[:, 1:]) ** 2), axis=1)
    s = s + (Y[:, -1] - 1.0) ** 2
    return -(math.pi / nd * s + np.sum(u(X, 10.0, 100.0, 4.0), axis=1))


def f13(X):
    s = np.sin(3.0 * math.pi * X[:, 0]) ** 2
    s = s + np.sum((X[:, :-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * math.pi * X[:, 1:]) ** 2), axis=1)
    xn = X[:, -1]
    s = s + (xn - 1.0) ** 2 * (1.0 + np.sin(2.0 * math.pi * xn) ** 2)
    return -(0.1 * s + np.sum(u(X, 5.0, 100.0, 4.0), axis=1))


def f14(X):
    diff = X[:, :, None] - FOXHOLES_A[None, :, :]  # (n, 2, 25)
    inner = np.arange(1, 26) + np.sum(diff**6, axis=1)
    return -1.0 / (0.002 + np.sum(1.0 / inner, axis=1))


def f15(X):
    x1, x2, x3, x4 = (X[:, k : k + 1] for k in range(4))
    b = KOWALIK_B
    with np.errstate(divide="ignore", invalid="ignore"):
        r = KOWALIK_A - x1 * (b**2 + b * x2) / (b**2 + b * x3 + x4)
        out = -np.sum(r**2, axis=1)
    # a vanishing denominator is a pole; never report NaN
    return np.where(np.isnan(out), -np.inf, out)


def f16(X):
    x1, x2 = X[:, 0], X[:, 1]
    return -(4 * x1**2 - 2.1 * x1**4 + x1**6 / 3 + x1 * x2 - 4 * x2**2 + 4 * x2**4)


def f17(X):
    x1, x2 = X[:, 0], X[:, 1]
    pi = math.pi
    z = (x2 - 5.1 * x1**2 / (4 * pi**2) + 5 * x1 / pi - 6) ** 2
    return -(z + 10 * (1 - 1 / (8 * pi)) * np.cos(x1) + 10)


def f18(X):
    x1, x2 = X[:, 0], X[:, 1]
    t1 = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    t2 = 30 + (2 * x1 - 3 * x2) ** 2 * (
        18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2
    )
    return -(t1 * t2)


def _hartman(X, A, P):
    e = np.sum(A[None] * (X[:, None, :] - P[None]) ** 2, axis=2)
    return np.sum(HARTMAN_C * np.exp(-e), axis=1)


def f19(X):
    return _hartman(X, HARTMAN3_A, HARTMAN3_P)


def f20(X):
    return _hartman(X, HARTMAN6_A, HARTMAN6_P)


def _shekel(X, m):
    d = np.sum((X[:, None, :] - SHEKEL_A[None, :m]) ** 2, axis=2)
    return np.sum(1.0 / (d + SHEKEL_C[:m]), axis=1)


def f21(X):
    return _shekel(X, 5)


def f22(X):
    return _shekel(X, 7)


def f23(X):
    return _shekel(X, 10)


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class BenchmarkSpec:
    """One suite entry.

    ``fmax`` is the true global maximum for dimension ``nd`` (what invariants
    check against); ``fmax_published`` is the value printed in the result
    tables, which is rounded for several entries (f8, f14, f17, f19-f23).
    """

    id: str
    func: Callable
    lo: Callable[[int], np.ndarray]
    hi: Callable[[int], np.ndarray]
    nd_default: int
    nd_fixed: bool
    fmax_fn: Callable[[int], float]
    fmax_published_fn: Callable[[int], float]
    xstar_fn: Callable[[int], np.ndarray] | None
    deterministic: bool = True
    title: str = ""
    notes: str = field(default="", compare=False)

    def _nd(self, nd):
        nd = self.nd_default if nd is None else int(nd)
        if self.nd_fixed and nd != self.nd_default:
            raise BenchmarkError(f"{self.id} is fixed at nd={self.nd_default}, got {nd}")
        if nd < 2 and self.id in {"gso/f5", "gso/f12", "gso/f13"}:
            raise BenchmarkError(f"{self.id} needs nd >= 2")
        if nd < 1:
            raise BenchmarkError("nd must be positive")
        return nd

    def space(self, nd=None) -> DecisionSpace:
        nd = self._nd(nd)
        return make_decision_space(self.lo(nd), self.hi(nd))

    @property
    def fmax(self) -> float:
        return self.fmax_fn(self.nd_default)

    @property
    def fmax_published(self) -> float:
        return self.fmax_published_fn(self.nd_default)

    def fmax_at(self, nd=None) -> float:
        return self.fmax_fn(self._nd(nd))

    def fmax_published_at(self, nd=None) -> float:
        return self.fmax_published_fn(self._nd(nd))

    def xstar(self, nd=None):
        if self.xstar_fn is None:
            return None
        return np.asarray(self.xstar_fn(self._nd(nd)), dtype=float)

    def objective(self, nd=None, noise=None) -> "BenchmarkObjective":
        return BenchmarkObjective(self, self._nd(nd), noise)

    def __call__(self, X, noise=None):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        self._nd(X.shape[1])
        if self.deterministic:
            return self.func(X)
        return self.func(X, noise)


class BenchmarkObjective:
    """A benchmark bound to a dimension and (for f7) a noise stream."""

    vectorized = True

    def __init__(self, spec: BenchmarkSpec, nd: int, noise=None):
        if not spec.deterministic and noise is None:
            raise BenchmarkError(f"{spec.id} needs a noise stream")
        self.spec = spec
        self.nd = nd
        self.noise = noise

    def __call__(self, X):
        X = np.asarray(X, dtype=float)
        single = X.ndim == 1
        X = np.atleast_2d(X)
        if X.shape[1] != self.nd:
            raise BenchmarkError(f"{self.spec.id}: expected {self.nd} coordinates, got {X.shape[1]}")
        out = self.spec.func(X) if self.spec.deterministic else self.spec.func(X, self.noise)
        return float(out[0]) if single else out


def _box(a, b):
    return (lambda nd: np.full(nd, float(a))), (lambda nd: np.full(nd, float(b)))


def _const(v):
    return lambda nd: float(v)


def _point(*xs):
    return lambda nd: np.array(xs, dtype=float)


def _fill(v):
    return lambda nd: np.full(nd, float(v))


SCHWEFEL_ARGMAX = 420.96874369616904
SCHWEFEL_PER_DIM = 418.9828872724328  # x sin(sqrt|x|) at SCHWEFEL_ARGMAX


def _spec(id, func, box, nd, fixed, fmax, fpub, xstar, title, deterministic=True):
    lo, hi = box
    return BenchmarkSpec(
        id=id,
        func=func,
        lo=lo,
        hi=hi,
        nd_default=nd,
        nd_fixed=fixed,
        fmax_fn=fmax,
        fmax_published_fn=fpub,
        xstar_fn=xstar,
        deterministic=deterministic,
        title=title,
    )


def _build_registry():
    zero = _const(0.0)
    specs = [
        _spec("vpso/ackley", vpso_ackley, _box(-30, 30), 30, False, zero, zero, _fill(0), "Ackley"),
        _spec(
            "vpso/cosine_mixture",
            vpso_cosine_mixture,
            _box(-1, 1),
            30,
            False,
            lambda nd: 0.1 * nd,
            lambda nd: 0.1 * nd,
            _fill(0),
            "Cosine Mixture",
        ),
        _spec("vpso/exponential", vpso_exponential, _box(-1, 1), 30, False,
              _const(1.0), _const(1.0), _fill(0), "Exponential"),
        _spec("vpso/griewank", vpso_griewank, _box(-600, 600), 30, False, zero, zero,
              _fill(0), "Griewank"),
        _spec("vpso/rastrigin", vpso_rastrigin, _box(-5.12, 5.12), 30, False, zero, zero,
              _fill(0), "Rastrigin"),
        _spec(
            "vpso/schwefel",
            vpso_schwefel,
            _box(-500, 500),
            30,
            False,
            lambda nd: nd * (SCHWEFEL_PER_DIM - 418.9829),
            zero,
            _fill(SCHWEFEL_ARGMAX),
            "Schwefel",
        ),
        _spec("gso/f1", f1, _box(-100, 100), 30, False, zero, zero, _fill(0), "Sphere"),
        _spec("gso/f2", f2, _box(-10, 10), 30, False, zero, zero, _fill(0), "Schwefel 2.22"),
        _spec("gso/f3", f3, _box(-100, 100), 30, False, zero, zero, _fill(0), "Schwefel 1.2"),
        _spec("gso/f4", f4, _box(-100, 100), 30, False, zero, zero, _fill(0), "Schwefel 2.21"),
        _spec("gso/f5", f5, _box(-30, 30), 30, False, zero, zero, _fill(1), "Rosenbrock"),
        _spec("gso/f6", f6, _box(-100, 100), 30, False, zero, zero, _fill(0), "Step"),
        _spec("gso/f7", f7, _box(-1.28, 1.28), 30, False, zero, zero, _fill(0),
              "Quartic with noise", deterministic=False),
        _spec(
            "gso/f8",
            f8,
            _box(-500, 500),
            30,
            False,
            lambda nd: nd * SCHWEFEL_PER_DIM,
            lambda nd: 12569.5 if nd == 30 else nd * SCHWEFEL_PER_DIM,
            _fill(SCHWEFEL_ARGMAX),
            "Schwefel 2.26",
        ),
        _spec("gso/f9", f9, _box(-5.12, 5.12), 30, False, zero, zero, _fill(0), "Rastrigin"),
        _spec("gso/f10", f10, _box(-32, 32), 30, False, zero, zero, _fill(0), "Ackley"),
        _spec("gso/f11", f11, _box(-600, 600), 30, False, zero, zero, _fill(100), "Griewank"),
        _spec("gso/f12", f12, _box(-50, 50), 30, False, zero, zero, _fill(-1), "Penalized 1"),
        _spec("gso/f13", f13, _box(-50, 50), 30, False, zero, zero, _fill(1), "Penalized 2"),
        _spec(
            "gso/f14",
            f14,
            _box(-65.536, 65.536),
            2,
            True,
            _const(-0.99800383779445),
            _const(-1.0),
            _point(-31.97833477, -31.978338),
            "Shekel's Foxholes",
        ),
        _spec(
            "gso/f15",
            f15,
            _box(-5, 5),
            4,
            True,
            _const(-3.0748598780560557e-4),
            _const(-0.0003075),
            _point(0.19283345, 0.19083624, 0.1231173, 0.13576599),
            "Kowalik",
        ),
        _spec(
            "gso/f16",
            f16,
            _box(-5, 5),
            2,
            True,
            _const(1.0316284534898776),
            _const(1.0316285),
            _point(0.08984202, -0.7126564),
            "Six-Hump Camel-Back",
        ),
        BenchmarkSpec(
            id="gso/f17",
            func=f17,
            lo=_point(-5, 0),
            hi=_point(10, 15),
            nd_default=2,
            nd_fixed=True,
            fmax_fn=_const(-5.0 / (4.0 * math.pi)),
            fmax_published_fn=_const(-0.398),
            xstar_fn=_point(math.pi, 2.275),
            title="Branin",
        ),
        _spec("gso/f18", f18, _box(-2, 2), 2, True, _const(-3.0), _const(-3.0),
              _point(0, -1), "Goldstein-Price"),
        _spec(
            "gso/f19",
            f19,
            _box(0, 1),
            3,
            True,
            _const(3.8627821478207554),
            _const(3.86),
            _point(0.114, 0.556, 0.852),
            "Hartman 3",
        ),
        _spec(
            "gso/f20",
            f20,
            _box(0, 1),
            6,
            True,
            _const(3.3219951715842426),
            _const(3.32),
            _point(0.201, 0.150, 0.477, 0.275, 0.311, 0.657),
            "Hartman 6",
        ),
        _spec("gso/f21", f21, _box(0, 10), 4, True, _const(10.153199679058229), _const(10.0),
              _point(4.00003715, 4.00013328, 4.00003715, 4.00013328), "Shekel 5"),
        _spec("gso/f22", f22, _box(0, 10), 4, True, _const(10.402940566818662), _const(10.0),
              _point(4.00057291, 4.00068937, 3.99948971, 3.99960616), "Shekel 7"),
        _spec("gso/f23", f23, _box(0, 10), 4, True, _const(10.536409816692045), _const(10.0),
              _point(4.00074653, 4.00059294, 3.9996634, 3.9995098), "Shekel 10"),
    ]
    return {s.id: s for s in specs}


_REGISTRY = _build_registry()

VPSO_IDS = tuple(k for k in _REGISTRY if k.startswith("vpso/"))
GSO_IDS = tuple(k for k in _REGISTRY if k.startswith("gso/"))


def registry() -> list[BenchmarkSpec]:
    return list(_REGISTRY.values())


def lookup(id: str) -> BenchmarkSpec:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise BenchmarkError(f"unknown benchmark id {id!r}") from None


def suite_ids(suite: str) -> tuple[str, ...]:
    if suite == "vpso":
        return VPSO_IDS
    if suite == "gso":
        return GSO_IDS
    if suite == "all":
        return VPSO_IDS + GSO_IDS
    raise BenchmarkError(f"unknown suite {suite!r}")


def _single(id, x, noise=None):
    spec = lookup(id)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise BenchmarkError("expected a single coordinate vector")
    return float(spec.objective(x.size, noise)(x[None, :])[0])


def eval_vpso(name: str, x) -> float:
    """Evaluate one v-PSO benchmark (``name`` with or without ``vpso/``)."""
    return _single(name if name.startswith("vpso/") else f"vpso/{name}", x)


def eval_gso(name: str, x, noise=None) -> float:
    """Evaluate one GSO-suite benchmark; ``name`` like ``"f8"`` or ``"gso/f8"``."""
    return _single(name if name.startswith("gso/") else f"gso/{name}", x, noise)
