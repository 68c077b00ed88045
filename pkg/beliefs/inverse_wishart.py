from dataclasses import dataclass
from typing import Optional

import numpy as np

from utils.errors import InvalidBeliefError, InvalidCovarianceError
from utils.linalg import chol_lower, spd_inv, symmetrize
from .gaussian import frozen_array, check_symmetric


@dataclass(frozen=True)
class InverseWishartState:
    """
        Noise-covariance belief IW(Sigma | nu, V) over d x d matrices.
        Requires nu > d + 1 so that the mean-precision factor nu - d - 1 is positive.
    """
    nu: float
    V: np.ndarray

    def __post_init__(self):
        V = frozen_array(self.V, 2)
        if V.shape[0] != V.shape[1]:
            raise InvalidBeliefError('scale matrix must be square, got {}'.format(V.shape))
        object.__setattr__(self, 'V', V)
        object.__setattr__(self, 'nu', float(self.nu))
        if not self.nu > self.d + 1:
            raise InvalidBeliefError('degrees of freedom {} must exceed d + 1 = {}'.format(
                self.nu, self.d + 1))
        check_symmetric(V, 'scale matrix')
        try:
            chol_lower(V)
        except InvalidCovarianceError as e:
            raise InvalidBeliefError('scale matrix: {}'.format(e)) from e

    @property
    def d(self):
        return self.V.shape[0]

    @property
    def dof_excess(self):
        # nu - n - 1 with n read as the matrix side length
        return self.nu - self.d - 1


@dataclass(frozen=True)
class CovarianceDynamics:
    """
        Forgetting model of the noise covariance between steps.
        B=None means the recommended B = sqrt(rho) I.
    """
    rho: float = 1.0 - np.exp(-3.0)
    B: Optional[np.ndarray] = None

    def __post_init__(self):
        if not 0.0 < self.rho <= 1.0:
            raise InvalidBeliefError('rho must lie in (0, 1], got {}'.format(self.rho))
        if self.B is not None:
            B = frozen_array(self.B, 2)
            if B.shape[0] != B.shape[1]:
                raise InvalidBeliefError('B must be square, got {}'.format(B.shape))
            det = abs(np.linalg.det(B))
            if not 0.0 < det <= 1.0 + 1e-12:
                raise InvalidBeliefError('|det B| must lie in (0, 1], got {}'.format(det))
            object.__setattr__(self, 'B', B)

    def matrix(self, d):
        if self.B is None:
            return np.sqrt(self.rho) * np.eye(d)
        if self.B.shape != (d, d):
            raise InvalidBeliefError('B of shape {} does not match noise dim {}'.format(
                self.B.shape, d))
        return np.asarray(self.B)

    def is_diagonal(self):
        return self.B is None or not np.any(self.B - np.diag(np.diag(self.B)))


def iw_mean_precision(iw):
    """<Sigma^-1> = (nu - n - 1) V^-1."""
    if not iw.dof_excess > 0:
        raise InvalidBeliefError('nu - d - 1 must be positive')
    return iw.dof_excess * spd_inv(iw.V, name='IW scale')


def iw_expected_cov(iw):
    """Point estimate V / (nu - n - 1), the inverse of iw_mean_precision."""
    if not iw.dof_excess > 0:
        raise InvalidBeliefError('nu - d - 1 must be positive')
    return np.asarray(iw.V) / iw.dof_excess


def iw_predict(iw, dyn):
    """nu- = rho (nu - n - 1) + n + 1,  V- = B V B^T."""
    d = iw.d
    B = dyn.matrix(d)
    nu = dyn.rho * iw.dof_excess + d + 1
    V = symmetrize(B @ iw.V @ B.T)
    return InverseWishartState(nu=nu, V=V)


def iw_prior(d, eps=1.0, sigma0_2=1.0):
    """Weak prior nu0 = d + 1 + eps, V0 = eps sigma0^2 I; expected cov sigma0^2 I."""
    if not eps > 0 or not sigma0_2 > 0:
        raise InvalidBeliefError('prior eps and sigma0_2 must be positive')
    return InverseWishartState(nu=d + 1.0 + eps, V=eps * sigma0_2 * np.eye(d))
