import numpy as np


def range_h(x, sensors, position_index=(0, 1)):
    """Distance from every sensor to the target position (u, v)."""
    x = np.asarray(x, dtype=np.float64)
    p = x[list(position_index)]
    return np.sqrt(np.sum((sensors.positions - p[None, :]) ** 2, axis=1))


def range_jacobian(x, sensors, position_index=(0, 1)):
    """
        d r_i / d(u, v) = ((u, v) - s_i) / r_i.
        Undefined (nan) for a target sitting on a sensor.
    """
    x = np.asarray(x, dtype=np.float64)
    iu, iv = position_index
    diff = x[[iu, iv]][None, :] - sensors.positions
    r = np.sqrt(np.sum(diff ** 2, axis=1))
    J = np.zeros((len(sensors), x.shape[0]))
    with np.errstate(divide='ignore', invalid='ignore'):
        J[:, iu] = diff[:, 0] / r
        J[:, iv] = diff[:, 1] / r
    return J
