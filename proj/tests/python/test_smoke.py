import math

import numpy as np
import pytest

import radar


def test_poincare_distance():
    m = radar.Manifold("poincare_ball", 2)
    assert m.curvature == -1.0
    assert m.dist(m.origin(), np.array([0.5, 0.0])) == pytest.approx(math.log(3.0))
    v = m.log(m.origin(), np.array([0.5, 0.0]))
    assert v.shape == (2,)
    assert np.allclose(m.exp(m.origin(), v), [0.5, 0.0])


def test_spd_and_projection():
    m = radar.Manifold("diag_spd", 2)
    e = m.exp(np.eye(2), np.eye(2))
    assert m.dist(np.eye(2), e) == pytest.approx(math.sqrt(2.0))
    flat = radar.Manifold("euclidean", 2)
    assert np.allclose(flat.project(flat.origin(), 1.0, np.array([2.0, 0.0])), [1.0, 0.0])
    assert np.allclose(flat.mean([np.array([0.0, 0.0]), np.array([2.0, 0.0])], np.array([0.5, 0.5])), [1.0, 0.0])


def test_bad_input_raises_value_error():
    m = radar.Manifold("poincare_ball", 2)
    with pytest.raises(ValueError):
        m.dist(m.origin(), np.array([1.5, 0.0]))
    with pytest.raises(ValueError):
        radar.run({"T": 5, "scenario": "nowhere"})


def test_hedge_and_zeta():
    w = radar.hedge_update(np.array([0.5, 0.5]), np.array([0.0, 1.0]), 1.0)
    assert w[0] == pytest.approx(0.731059, abs=1e-6)
    assert np.allclose(radar.radar_initial_weights(3), [2 / 3, 2 / 9, 1 / 9])
    assert radar.zeta(-1.0, 1.0) == pytest.approx(1.313035, abs=1e-6)


def test_run_and_game():
    cfg = {"algorithm": "rogd", "T": 30, "seed": 2, "scenario": {"kind": "drifting_mean", "dim": 2}}
    a = radar.run(cfg)
    b = radar.run(cfg)
    assert a == b
    trace = a[0]["trace"]
    assert len(trace) == 30
    assert all(r["bound_ok"] for r in trace)
    assert a[0]["summary"]["schema"] == 1
    g = radar.play_game(3, 100, [1.0], 2.0)
    assert g["regret"] == pytest.approx(10.0)
    assert g["lifted_regret"] == pytest.approx(g["regret"], abs=1e-8)
