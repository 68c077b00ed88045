from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from moments.propagate import subtract, weighted_mean
from utils.errors import ConfigError


@dataclass(frozen=True)
class AdditiveModel:
    """
        x_k = f(x_{k-1}) + q,  q ~ N(0, Q)
        y_k = h(x_k) + r,      r ~ N(0, Sigma_k)

        f_jacobian / h_jacobian are optional analytic Jacobians, residual the
        innovation hook (plain subtraction unless the measurement is an angle),
        mean_fn the matching average of measurement points and position_index
        the state components holding the 2-D position.
    """
    state_dim: int
    meas_dim: int
    f: Callable
    h: Callable
    Q: np.ndarray
    f_jacobian: Optional[Callable] = None
    h_jacobian: Optional[Callable] = None
    residual: Callable = subtract
    mean_fn: Callable = weighted_mean
    position_index: Tuple[int, int] = (0, 1)
    name: str = 'additive'

    def __post_init__(self):
        Q = np.array(self.Q, dtype=np.float64, ndmin=2)
        if Q.shape != (self.state_dim, self.state_dim):
            raise ConfigError('process noise of shape {} for state dim {}'.format(
                Q.shape, self.state_dim), key='Q')
        Q.setflags(write=False)
        object.__setattr__(self, 'Q', Q)

    def check(self, x):
        """Evaluate f and h at x and check the declared dimensions."""
        fx = np.atleast_1d(self.f(x))
        hx = np.atleast_1d(self.h(x))
        if fx.shape != (self.state_dim,) or hx.shape != (self.meas_dim,):
            raise ConfigError('model {} returns shapes {} and {}, declared ({},) and ({},)'.format(
                self.name, fx.shape, hx.shape, self.state_dim, self.meas_dim))
        return fx, hx


@dataclass(frozen=True)
class SensorArray:
    positions: np.ndarray   # [S, 2]

    def __post_init__(self):
        pos = np.array(self.positions, dtype=np.float64, ndmin=2)
        if pos.ndim != 2 or pos.shape[1] != 2 or len(pos) == 0:
            raise ConfigError('expected a non-empty list of 2-D positions', key='sensors')
        if not np.all(np.isfinite(pos)):
            raise ConfigError('sensor positions must be finite', key='sensors')
        pos.setflags(write=False)
        object.__setattr__(self, 'positions', pos)

    def __len__(self):
        return len(self.positions)
