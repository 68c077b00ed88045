from dataclasses import dataclass

import numpy as np

from utils.errors import InvalidBeliefError, InvalidCovarianceError
from utils.linalg import chol_lower


SYMMETRY_TOL = 1e-10


def frozen_array(x, ndim):
    a = np.array(x, dtype=np.float64, ndmin=ndim)
    a.setflags(write=False)
    return a


def check_symmetric(M, name):
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    if np.max(np.abs(M - M.T), initial=0.0) > SYMMETRY_TOL * scale:
        raise InvalidBeliefError('{} is not symmetric'.format(name))


@dataclass(frozen=True)
class GaussianState:
    """State belief N(m, P)."""
    m: np.ndarray
    P: np.ndarray

    def __post_init__(self):
        m = frozen_array(self.m, 1)
        P = frozen_array(self.P, 2)
        if m.ndim != 1 or P.shape != (m.shape[0], m.shape[0]):
            raise InvalidBeliefError('mean of dim {} does not match covariance of shape {}'.format(
                m.shape, P.shape))
        check_symmetric(P, 'state covariance')
        try:
            chol_lower(P)
        except InvalidCovarianceError as e:
            raise InvalidBeliefError('state covariance: {}'.format(e)) from e
        object.__setattr__(self, 'm', m)
        object.__setattr__(self, 'P', P)

    @property
    def dim(self):
        return self.m.shape[0]
