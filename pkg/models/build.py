from functools import partial

import numpy as np
from loguru import logger

from utils.errors import ConfigError
from .basic import AdditiveModel, SensorArray
from .dynamics import wiener_velocity, coordinated_turn_f, coordinated_turn_jacobian, coordinated_turn_Q
from .sensors import range_h, range_jacobian, bearings_h, bearings_jacobian, angle_residual, circular_mean


def linear_map(x, A):
    return A @ x


def constant_matrix(x, A):
    return A


def build_range_only(cfg, sensors):
    # state (u, v, du, dv)
    A, Q = wiener_velocity(cfg['q'], cfg['dt'], ndim=2)
    return AdditiveModel(
        state_dim=4,
        meas_dim=len(sensors),
        f=partial(linear_map, A=A),
        h=partial(range_h, sensors=sensors),
        Q=Q,
        f_jacobian=partial(constant_matrix, A=A),
        h_jacobian=partial(range_jacobian, sensors=sensors),
        name='range_only',
        )


def build_bearings_only(cfg, sensors):
    # state (u, du, v, dv, omega)
    dt = cfg['dt']
    return AdditiveModel(
        state_dim=5,
        meas_dim=len(sensors),
        f=partial(coordinated_turn_f, dt=dt),
        h=partial(bearings_h, sensors=sensors),
        Q=coordinated_turn_Q(cfg['q_vel'], cfg['q_turn'], dt),
        f_jacobian=partial(coordinated_turn_jacobian, dt=dt),
        h_jacobian=partial(bearings_jacobian, sensors=sensors),
        residual=angle_residual,
        mean_fn=circular_mean,
        position_index=(0, 2),
        name='bearings_only',
        )


def build_model(cfg):
    """State-space model and sensor array of the configured experiment."""
    logger.info('==============================')
    logger.info('Build {} model ...'.format(cfg['experiment']))

    sensors = SensorArray(positions=np.asarray(cfg['sensors'], dtype=np.float64))
    if cfg['experiment'] == 'range_only':
        model = build_range_only(cfg, sensors)
    elif cfg['experiment'] == 'bearings_only':
        model = build_bearings_only(cfg, sensors)
    else:
        raise ConfigError('unknown experiment: {}'.format(cfg['experiment']), key='experiment')

    logger.info('state dim: {}, sensors: {}'.format(model.state_dim, len(sensors)))
    return model, sensors
