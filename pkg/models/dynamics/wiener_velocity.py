import numpy as np

from utils.errors import ConfigError


def wiener_velocity(q, dt, ndim=2):
    """
        Discretized Wiener velocity model for the state
        (positions..., velocities...) with `ndim` spatial axes.

        A = [[I, dt I], [0, I]]
        Q = q [[dt^3/3 I, dt^2/2 I], [dt^2/2 I, dt I]]
    """
    if not q > 0:
        raise ConfigError('spectral density must be positive, got {}'.format(q), key='q')
    if not dt > 0:
        raise ConfigError('time step must be positive, got {}'.format(dt), key='dt')
    I = np.eye(ndim)
    A = np.kron(np.array([[1.0, dt], [0.0, 1.0]]), I)
    Q = q * np.kron(np.array([[dt ** 3 / 3.0, dt ** 2 / 2.0],
                              [dt ** 2 / 2.0, dt]]), I)
    return A, Q
