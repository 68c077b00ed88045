import numpy as np
from scipy.linalg import cholesky, cho_solve, LinAlgError
from loguru import logger

from .errors import InvalidCovarianceError, NumericalFailureError


JITTER_SCALE = 1e-12
JITTER_GROWTH = 10.0
JITTER_ATTEMPTS = 3


def symmetrize(C):
    C = np.asarray(C, dtype=np.float64)
    return 0.5 * (C + C.T)


def chol_lower(P):
    """Lower Cholesky factor, InvalidCovarianceError if P is not SPD."""
    P = np.asarray(P, dtype=np.float64)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise InvalidCovarianceError('expected a square matrix, got shape {}'.format(P.shape))
    if not np.all(np.isfinite(P)):
        raise InvalidCovarianceError('covariance has non-finite entries')
    try:
        return cholesky(P, lower=True)
    except LinAlgError as e:
        raise InvalidCovarianceError('covariance is not positive definite: {}'.format(e)) from e


def is_spd(P):
    try:
        chol_lower(P)
    except InvalidCovarianceError:
        return False
    return True


def ensure_spd(C, name='covariance'):
    """
        Symmetrize C and return it once it factorizes.

        On failure a diagonal jitter of 1e-12 * trace / dim is added and
        grown x10, at most JITTER_ATTEMPTS times.
    """
    C = symmetrize(C)
    if is_spd(C):
        return C

    dim = C.shape[0]
    scale = abs(np.trace(C)) / dim
    if not np.isfinite(scale) or scale == 0.0:
        scale = 1.0
    jitter = JITTER_SCALE * scale
    for _ in range(JITTER_ATTEMPTS):
        repaired = C + jitter * np.eye(dim)
        if is_spd(repaired):
            logger.debug('{} repaired with jitter {:.3e}'.format(name, jitter))
            return repaired
        jitter *= JITTER_GROWTH

    raise NumericalFailureError('{} is not positive definite after jitter'.format(name))


def spd_solve(S, B, name='innovation covariance'):
    """Solve S X = B for SPD S."""
    try:
        factor = cholesky(S, lower=True)
    except LinAlgError as e:
        raise NumericalFailureError('{} is singular: {}'.format(name, e)) from e
    return cho_solve((factor, True), B)


def spd_inv(S, name='matrix'):
    S = np.asarray(S, dtype=np.float64)
    return symmetrize(spd_solve(S, np.eye(S.shape[0]), name=name))


def noise_factor(C):
    """
        Square-root factor used to draw N(0, C) samples.
        An all-zero C gives a zero factor (noiseless simulation).
    """
    C = symmetrize(C)
    if not np.any(C):
        return np.zeros_like(C)
    return cholesky(ensure_spd(C, name='noise covariance'), lower=True)


def frobenius(A):
    return float(np.linalg.norm(A, ord='fro'))
