import copy

import numpy as np
import pytest

from config import default_configs
from dataset import build_dataset, build_cov_source, build_trajectory, simulate, waypoint_trajectory
from models import AdditiveModel, SensorArray, build_model
from models.noise import TrueCovTrace
from models.sensors import range_h
from utils.errors import ConfigError


def small_config(experiment, steps=40):
    cfg = copy.deepcopy(default_configs[experiment])
    cfg['steps'] = steps
    return cfg


class TestSimulate:
    @pytest.mark.parametrize('experiment', ['range_only', 'bearings_only'])
    def test_deterministic(self, experiment):
        cfg = small_config(experiment)
        model, sensors = build_model(cfg)
        a = build_dataset(cfg, model, sensors, seed=123)
        b = build_dataset(cfg, model, sensors, seed=123)
        c = build_dataset(cfg, model, sensors, seed=124)

        assert a.measurements.tobytes() == b.measurements.tobytes()
        assert a.states.tobytes() == b.states.tobytes()
        assert a.covs.tobytes() == b.covs.tobytes()
        assert not np.array_equal(a.measurements, c.measurements)

    def test_noiseless(self):
        sensors = SensorArray(positions=[[0.0, 0.0], [5.0, 0.0]])
        A = np.array([[1.0, 0.0, 0.1, 0.0], [0.0, 1.0, 0.0, 0.1],
                      [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]])
        model = AdditiveModel(state_dim=4, meas_dim=2, f=lambda x: A @ x,
                              h=lambda x: range_h(x, sensors), Q=np.zeros((4, 4)))
        sim = simulate(model, sensors, np.zeros((25, 2, 2)), 25, seed=7,
                       x0=np.array([1.0, 1.0, 0.5, -0.2]))

        x = np.array([1.0, 1.0, 0.5, -0.2])
        for k in range(25):
            x = A @ x
            np.testing.assert_array_equal(sim.states[k], x)
            np.testing.assert_array_equal(sim.measurements[k], range_h(x, sensors))

    def test_cov_trace_source(self):
        cfg = small_config('bearings_only')
        model, sensors = build_model(cfg)
        source = build_cov_source(cfg, model)
        assert isinstance(source, TrueCovTrace)
        sim = build_dataset(cfg, model, sensors, seed=0, cov_source=source)
        np.testing.assert_array_equal(sim.covs, source.covs)
        assert len(sim) == cfg['steps']

    def test_trajectory_shape_checked(self):
        cfg = small_config('range_only')
        model, sensors = build_model(cfg)
        with pytest.raises(ValueError):
            simulate(model, sensors, build_cov_source(cfg, model), 10, 0,
                     np.zeros(4), trajectory=np.zeros((9, 4)))

    def test_range_only_scenario(self):
        cfg = copy.deepcopy(default_configs['range_only'])
        model, sensors = build_model(cfg)
        sim = build_dataset(cfg, model, sensors, seed=0)

        assert sim.measurements.shape == (1000, 3)
        assert sim.covs.shape == (1000, 3, 3)
        assert np.all(np.isfinite(sim.measurements))
        for C in sim.covs[::50]:
            np.linalg.cholesky(C)
        # the target path crosses both correlated regions
        off = sim.covs[:, [0, 0, 1], [1, 2, 2]]
        assert np.max(np.abs(off)) > 0.0


class TestTrajectory:
    def test_closed_loop(self):
        wp = default_configs['range_only']['trajectory']['waypoints']
        pos, vel = waypoint_trajectory(wp, 1000, 0.01, closed=True)
        assert pos.shape == (1001, 2) and vel.shape == (1001, 2)
        np.testing.assert_allclose(pos[0], wp[0], atol=1e-12)
        np.testing.assert_allclose(pos[-1], wp[0], atol=1e-9)
        np.testing.assert_allclose(vel[0], vel[-1], atol=1e-9)

    def test_velocity_consistent(self):
        pos, vel = waypoint_trajectory([[0.0, 0.0], [1.0, 2.0], [3.0, 2.5]], 400, 0.005)
        np.testing.assert_allclose(np.diff(pos, axis=0) / 0.005, 0.5 * (vel[1:] + vel[:-1]),
                                   atol=1e-3)

    def test_invalid(self):
        with pytest.raises(ConfigError):
            waypoint_trajectory([[0.0, 0.0]], 10, 0.1)
        with pytest.raises(ConfigError):
            waypoint_trajectory([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]], 10, 0.1)

    def test_build_trajectory(self):
        cfg = small_config('range_only', steps=30)
        model, _ = build_model(cfg)
        x0, states = build_trajectory(cfg, model)
        assert x0.shape == (4,) and states.shape == (30, 4)

        cfg = small_config('bearings_only')
        model, _ = build_model(cfg)
        x0, states = build_trajectory(cfg, model)
        assert states is None
        np.testing.assert_array_equal(x0, cfg['x0'])
