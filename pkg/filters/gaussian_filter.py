from dataclasses import dataclass

import numpy as np

from beliefs import GaussianState
from moments import propagate
from moments.propagate import subtract
from utils.linalg import ensure_spd, spd_solve, symmetrize


@dataclass(frozen=True)
class UpdateDiagnostics:
    iterations_run: int
    final_delta: float              # Frobenius change of V in the last sweep
    innovation: np.ndarray          # y - mu
    predicted_meas_cov: np.ndarray  # final S


def gf_predict(belief, f, Q, scheme, jacobian=None):
    """m- = E[f(x)],  P- = Cov[f(x)] + Q."""
    mom = propagate(f, belief.m, belief.P, scheme, jacobian)
    P = ensure_spd(mom.cov + np.asarray(Q, dtype=np.float64), name='predicted covariance')
    return GaussianState(m=mom.mean, P=P)


def kalman_gain(C, S):
    # K = C S^-1 with S SPD
    return spd_solve(S, C.T).T


def gf_update(belief, y, h, Sigma, scheme, jacobian=None, residual=None, mean_fn=None):
    """
        Gaussian filter update with known measurement noise covariance Sigma.
        residual and mean_fn are the measurement hooks of the model.
    """
    residual = subtract if residual is None else residual
    y = np.atleast_1d(np.asarray(y, dtype=np.float64))
    mom = propagate(h, belief.m, belief.P, scheme, jacobian,
                    mean_fn=mean_fn, residual_fn=residual)

    S = ensure_spd(mom.cov + np.asarray(Sigma, dtype=np.float64), name='innovation covariance')
    K = kalman_gain(mom.cross_cov, S)
    e = residual(y, mom.mean)
    m = belief.m + K @ e
    P = ensure_spd(belief.P - K @ S @ K.T, name='updated covariance')

    diag = UpdateDiagnostics(iterations_run=1, final_delta=0.0,
                             innovation=e, predicted_meas_cov=symmetrize(S))
    return GaussianState(m=m, P=P), diag
