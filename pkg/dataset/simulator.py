from dataclasses import dataclass

import numpy as np
from loguru import logger

from models.noise import NoiseFieldConfig, TrueCovTrace, noise_field_cov
from utils.linalg import noise_factor


@dataclass(frozen=True)
class SimulationResult:
    states: np.ndarray          # [K, n] true states x_1..x_K
    measurements: np.ndarray    # [K, d]
    covs: np.ndarray            # [K, d, d] true Sigma_k
    x0: np.ndarray              # state before the first measurement

    def __len__(self):
        return len(self.measurements)


def _true_cov(cov_source, k, x, sensors, position_index):
    if isinstance(cov_source, NoiseFieldConfig):
        return noise_field_cov(x[list(position_index)], sensors, cov_source)
    if isinstance(cov_source, TrueCovTrace):
        return cov_source[k]
    # raw [K, d, d] array, no validation
    return np.asarray(cov_source[k], dtype=np.float64)


def simulate(model, sensors, cov_source, steps, seed, x0, trajectory=None):
    """
        Draw a state trajectory and measurements y_k = h(x_k) + r_k,
        r_k ~ N(0, Sigma_k).

        cov_source is a NoiseFieldConfig (Sigma_k from the target geometry),
        a TrueCovTrace, or a raw [K, d, d] array. A given trajectory
        ([steps, n] states x_1..x_K) replaces sampling from the dynamic model.
        Outputs depend only on the arguments; seed drives a private generator.
    """
    rng = np.random.default_rng(seed)
    x = np.asarray(x0, dtype=np.float64)
    if trajectory is not None:
        trajectory = np.asarray(trajectory, dtype=np.float64)
        if trajectory.shape != (steps, model.state_dim):
            raise ValueError('trajectory of shape {} for {} steps of dim {}'.format(
                trajectory.shape, steps, model.state_dim))
    Lq = noise_factor(model.Q)

    states = np.empty((steps, model.state_dim))
    measurements = np.empty((steps, model.meas_dim))
    covs = np.empty((steps, model.meas_dim, model.meas_dim))
    for k in range(steps):
        if trajectory is None:
            x = model.f(x) + Lq @ rng.standard_normal(model.state_dim)
        else:
            x = trajectory[k]
        Sigma = _true_cov(cov_source, k, x, sensors, model.position_index)
        r = noise_factor(Sigma) @ rng.standard_normal(model.meas_dim)

        states[k] = x
        measurements[k] = model.h(x) + r
        covs[k] = Sigma

    logger.debug('simulated {} steps with seed {}'.format(steps, seed))
    return SimulationResult(states=states, measurements=measurements, covs=covs,
                            x0=np.asarray(x0, dtype=np.float64))
