import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vsopt.benchmarks import lookup
from vsopt.space import EvaluationError, PointSet, make_decision_space
from vsopt.vso import ConfigError, VsoConfig, build_ispd, gamma_schedule, reposition, run_vso


class Constant:
    vectorized = True

    def __init__(self, c):
        self.c = c

    def __call__(self, X):
        return np.full(X.shape[0], self.c)


class Counting:
    """Serial wrapper that counts calls and records every F* candidate."""

    def __init__(self, f):
        self.f = f
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return float(self.f(x[None, :])[0])


def test_gamma_schedule_ten():
    g = gamma_schedule(10)
    assert np.array_equal(g, [0.05, 0.16, 0.27, 0.38, 0.49, 0.51, 0.62, 0.73, 0.84, 0.95])
    assert 0.5 not in g


def test_gamma_schedule_four_and_two():
    assert np.array_equal(gamma_schedule(4), [0.05, 0.49, 0.51, 0.95])
    assert np.array_equal(gamma_schedule(2), [0.05, 0.95])


@pytest.mark.parametrize("n", [0, 3, 7, -2])
def test_gamma_schedule_rejects(n):
    with pytest.raises(ConfigError):
        gamma_schedule(n)


@pytest.mark.parametrize(
    "kw", [{"rho": 1.5}, {"rho": -0.1}, {"points_per_dim": 3}, {"num_gammas": 5}, {"max_iterations": 0},
           {"saturation_tol": -1.0}]
)
def test_config_validation(kw):
    with pytest.raises(ConfigError):
        VsoConfig(**kw)


def test_ispd_hand_enumerated():
    ds = make_decision_space([-1, -1], [1, 1])
    pts = build_ispd(ds, VsoConfig(points_per_dim=2, num_gammas=2)).positions
    expected = np.array(
        [[-1, -0.9], [1, -0.9], [-0.9, -1], [-0.9, 1],
         [-1, 0.9], [1, 0.9], [0.9, -1], [0.9, 1]]
    )
    assert np.array_equal(pts, expected)


@pytest.mark.parametrize("lo, hi", [(-1.0, 1.0), (-600.0, 600.0), (-5.12, 5.12), (-32.768, 32.768)])
def test_ispd_mirror_symmetric_in_symmetric_box(lo, hi):
    ds = make_decision_space([lo] * 3, [hi] * 3)
    R = build_ispd(ds, VsoConfig(points_per_dim=6, num_gammas=10)).positions
    # the gamma and 1 - gamma blocks are exact negatives of each other as point sets
    blocks = R.reshape(10, 18, 3)
    for g in range(5):
        a = blocks[g][np.lexsort(blocks[g].T)]
        b = -blocks[9 - g]
        assert np.array_equal(a, b[np.lexsort(b.T)])
    assert R.min() == lo and R.max() == hi


def test_ispd_default_size_and_placement():
    ds = make_decision_space([-5.0] * 30, [5.0] * 30)
    pts = build_ispd(ds, VsoConfig())
    assert pts.np == 4200 and pts.iteration == 0
    assert ds.contains(pts.positions)
    assert not np.any(pts.positions == 0.0)


def test_ispd_probe_line_structure():
    ds = make_decision_space([0, 10, -3], [1, 20, 3])
    cfg = VsoConfig(points_per_dim=4, num_gammas=4)
    R = build_ispd(ds, cfg).positions
    block = 4 * 3
    for g, gamma in enumerate(gamma_schedule(4)):
        B = R[g * block : (g + 1) * block]
        diag = ds.mins + gamma * ds.widths
        for i in range(3):
            line = B[i * 4 : (i + 1) * 4]
            assert np.allclose(line[:, i], np.linspace(ds.mins[i], ds.maxs[i], 4))
            others = np.delete(line, i, axis=1)
            assert np.allclose(others, np.delete(diag, i))


def test_reposition_identities():
    pts = PointSet(np.array([[2.0, 0.0], [-1.0, 4.0]]), 3)
    r = np.array([0.0, 0.0])
    assert np.array_equal(reposition(pts, r, 0.0).positions, pts.positions)
    assert np.array_equal(reposition(pts, r, 1.0).positions, np.zeros((2, 2)))
    r2 = np.array([0.1, 0.7])
    assert np.array_equal(reposition(pts, r2, 1.0).positions, [r2, r2])
    half = reposition(pts, r, 0.5)
    assert np.array_equal(half.positions[0], [1.0, 0.0])
    assert half.iteration == 4
    with pytest.raises(ValueError):
        reposition(pts, np.zeros(3), 0.5)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=3),
    st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=3),
    st.floats(0.0, 1.0),
)
def test_reposition_never_moves_away(x, r, rho):
    x, r = np.array(x), np.array(r)
    moved = reposition(PointSet(x[None, :]), r, rho).positions[0]
    assert np.all(np.abs(moved - r) <= np.abs(x - r) * (1 + 1e-15) + 1e-9)


def test_constant_objective_stops_at_six():
    ds = make_decision_space([-1.0] * 3, [1.0] * 3)
    res = run_vso(Constant(2.5), ds)
    assert res.last_iteration == 6
    assert res.n_eval == res.num_points * 7
    assert res.best.fstar == 2.5
    assert [j for j, _ in res.trace] == list(range(7))
    # ties move R* to the last point of the initial scan
    assert res.best.found_at_point == res.num_points - 1


def test_rho_zero_and_one_runs():
    spec = lookup("gso/f1")
    ds = spec.space(5)
    for rho in (0.0, 1.0):
        res = run_vso(spec.objective(5), ds, VsoConfig(rho=rho))
        # nothing better than the initial best is ever sampled: first eligible stop
        assert res.last_iteration == 6
        assert res.best.fstar == res.trace[0][1]
        assert all(f == res.trace[0][1] for _, f in res.trace)


def test_deterministic_repeat():
    spec = lookup("gso/f10")
    a = run_vso(spec.objective(), spec.space())
    b = run_vso(spec.objective(), spec.space())
    assert a.best.fstar == b.best.fstar
    assert np.array_equal(a.best.rstar, b.best.rstar)
    assert a.trace == b.trace and a.n_eval == b.n_eval


@pytest.mark.parametrize("bid", ["gso/f16", "gso/f19", "gso/f9"])
def test_argmax_invariance(bid):
    spec = lookup(bid)
    base = spec.objective()

    class Shifted:
        vectorized = True

        def __call__(self, X):
            return base(X) + 7.0

    a = run_vso(base, spec.space())
    b = run_vso(Shifted(), spec.space())
    assert b.best.fstar == pytest.approx(a.best.fstar + 7.0, abs=1e-9)
    assert np.array_equal(a.best.rstar, b.best.rstar)
    assert (a.n_eval, a.last_iteration) == (b.n_eval, b.last_iteration)


@pytest.mark.parametrize("bid", ["gso/f17", "gso/f15", "gso/f21"])
def test_serial_and_vectorized_runs_agree(bid):
    spec = lookup(bid)
    serial = Counting(spec.objective())
    a = run_vso(serial, spec.space())
    b = run_vso(spec.objective(), spec.space())
    assert serial.calls == a.n_eval
    assert a.best.fstar == b.best.fstar
    assert a.best.found_at_point == b.best.found_at_point
    assert a.trace == b.trace


@pytest.mark.parametrize("bid", ["gso/f3", "gso/f14", "gso/f20", "vpso/schwefel"])
def test_run_invariants(bid):
    spec = lookup(bid)
    res = run_vso(spec.objective(), spec.space())
    values = [f for _, f in res.trace]
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert res.n_eval == res.num_points * (res.last_iteration + 1)
    assert res.last_iteration in (6, 9, 12, 15)
    assert spec.space().contains(res.best.rstar)


def test_failure_reports_location():
    def bad(x):
        raise ValueError("no")

    with pytest.raises(EvaluationError) as ei:
        run_vso(bad, make_decision_space([0.0], [1.0]))
    assert ei.value.iteration == 0 and ei.value.point == 0
