import numpy as np

from utils.errors import UndefinedBearingError


def wrap_angle(a):
    """Wrap angles to (-pi, pi]."""
    w = np.pi - np.mod(np.pi - np.asarray(a, dtype=np.float64), 2.0 * np.pi)
    # mod rounds up to 2 pi for tiny negative arguments
    return np.where(w <= -np.pi, w + 2.0 * np.pi, w)


def angle_residual(y, mu):
    return wrap_angle(np.asarray(y) - np.asarray(mu))


def circular_mean(Y, weights):
    """Weighted mean of angles Y [M, d], taken on the unit circle."""
    Y = np.asarray(Y, dtype=np.float64)
    return np.arctan2(weights @ np.sin(Y), weights @ np.cos(Y))


def bearings_h(x, sensors, position_index=(0, 2)):
    """Full-quadrant bearing from every sensor to the target, in (-pi, pi]."""
    x = np.asarray(x, dtype=np.float64)
    iu, iv = position_index
    du = x[iu] - sensors.positions[:, 0]
    dv = x[iv] - sensors.positions[:, 1]
    if np.any((du == 0.0) & (dv == 0.0)):
        raise UndefinedBearingError('target at ({}, {}) coincides with a sensor'.format(x[iu], x[iv]))
    return wrap_angle(np.arctan2(dv, du))


def bearings_jacobian(x, sensors, position_index=(0, 2)):
    x = np.asarray(x, dtype=np.float64)
    iu, iv = position_index
    du = x[iu] - sensors.positions[:, 0]
    dv = x[iv] - sensors.positions[:, 1]
    r2 = du ** 2 + dv ** 2
    J = np.zeros((len(sensors), x.shape[0]))
    with np.errstate(divide='ignore', invalid='ignore'):
        J[:, iu] = -dv / r2
        J[:, iv] = du / r2
    return J
