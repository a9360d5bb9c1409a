import math

import numpy as np
import pytest

from vsopt.space import (
    BestRecord,
    EvaluationError,
    SaturationState,
    SpaceError,
    evaluate_and_update,
    make_decision_space,
    principal_diagonal_point,
)


def test_unit_square_diagonal():
    ds = make_decision_space([0, 0], [1, 1])
    assert ds.nd == 2
    assert ds.diag_length == pytest.approx(math.sqrt(2), abs=1e-15)


def test_foxholes_box_diagonal():
    ds = make_decision_space([-65.536] * 2, [65.536] * 2)
    assert ds.diag_length == pytest.approx(185.36, abs=0.01)


def test_bounds_are_read_only():
    ds = make_decision_space([0, 0], [1, 1])
    with pytest.raises(ValueError):
        ds.mins[0] = 5


@pytest.mark.parametrize(
    "mins, maxs, msg",
    [
        ([], [], "empty"),
        ([0, 0], [1], "mismatch"),
        ([0, 0], [1, 0], "degenerate bound at index 1"),
        ([0, 2], [1, 1], "degenerate bound at index 1"),
        ([0, -np.inf], [1, 1], "non-finite"),
        ([0, 0], [np.nan, 1], "non-finite"),
    ],
)
def test_invalid_spaces(mins, maxs, msg):
    with pytest.raises(SpaceError, match=msg):
        make_decision_space(mins, maxs)


def test_diagonal_point_endpoints():
    ds = make_decision_space([-1.0, 3.0, 0.1], [2.0, 7.5, 0.3])
    assert np.array_equal(principal_diagonal_point(ds, 0.0), ds.mins)
    assert np.array_equal(principal_diagonal_point(ds, 1.0), ds.maxs)
    mid = principal_diagonal_point(ds, 0.5)
    assert np.allclose(mid, [0.5, 5.25, 0.2])
    with pytest.raises(SpaceError):
        principal_diagonal_point(ds, 1.5)


def test_saturation_registers():
    sat = SaturationState()
    sat.reset(1.0)
    assert sat.fbest1 == 1.0 and sat.fbest2 == -math.inf
    # first check compares against -inf: never saturated
    assert not sat.shift(1.0, 0.001)
    assert sat.shift(1.0005, 0.001)
    assert not sat.shift(1.01, 0.001)


class _Serial:
    def __init__(self, values):
        self.values = list(values)
        self.calls = 0
        self.hooks = 0

    def __call__(self, x):
        v = self.values[self.calls]
        self.calls += 1
        return v

    def on_best(self):
        self.hooks += 1


class _Vector:
    vectorized = True

    def __init__(self, values):
        self.values = np.asarray(values, dtype=float)

    def __call__(self, X):
        return self.values[: X.shape[0]]


@pytest.mark.parametrize(
    "values",
    [
        [1.0, 3.0, 2.0, 3.0, 0.0],
        [5.0, 5.0, 5.0],
        [np.nan, 2.0, np.nan],
        [-1.0, -0.5, -0.5, -2.0],
    ],
)
def test_vectorized_and_serial_scans_agree(values):
    X = np.arange(len(values) * 2, dtype=float).reshape(-1, 2)
    b1, b2 = BestRecord(), BestRecord()
    evaluate_and_update(_Serial(values), X, b1, 0)
    evaluate_and_update(_Vector(values), X, b2, 0)
    assert b1.fstar == b2.fstar
    assert b1.found_at_point == b2.found_at_point
    assert np.array_equal(b1.rstar, b2.rstar)


def test_ties_move_to_later_point():
    X = np.eye(3)
    best = BestRecord()
    evaluate_and_update(_Serial([2.0, 2.0, 1.0]), X, best, 0)
    assert best.found_at_point == 1


def test_on_best_hook_fires_per_update():
    obj = _Serial([1.0, 0.0, 2.0, 2.0, 1.0])
    evaluate_and_update(obj, np.zeros((5, 1)), BestRecord(), 0)
    assert obj.calls == 5
    assert obj.hooks == 3


def test_incumbent_survives_worse_batch():
    best = BestRecord()
    evaluate_and_update(_Vector([4.0]), np.zeros((1, 1)), best, 0)
    _, improved = evaluate_and_update(_Vector([1.0, 2.0]), np.ones((2, 1)), best, 1)
    assert not improved
    assert best.fstar == 4.0 and best.found_at_iteration == 0


def test_errors_carry_location():
    def bad(x):
        if x[0] > 1:
            raise RuntimeError("boom")
        return 0.0

    X = np.arange(4.0).reshape(-1, 1)
    with pytest.raises(EvaluationError) as ei:
        evaluate_and_update(bad, X, BestRecord(), 7)
    assert ei.value.point == 2
    assert ei.value.iteration == 7
