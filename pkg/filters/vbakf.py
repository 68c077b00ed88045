from dataclasses import dataclass, field

import numpy as np

from beliefs import GaussianState, InverseWishartState, JointBelief, CovarianceDynamics, iw_predict
from moments import IntegrationScheme
from utils.errors import ConfigError
from utils.linalg import ensure_spd, symmetrize, frobenius
from .gaussian_filter import UpdateDiagnostics, kalman_gain


@dataclass(frozen=True)
class VbConfig:
    """Control of the variational fixed-point iteration."""
    iterations: int = 5
    tol: float = 1e-8
    diagonal: bool = False
    dyn: CovarianceDynamics = field(default_factory=CovarianceDynamics)
    scheme: IntegrationScheme = field(default_factory=IntegrationScheme)

    def __post_init__(self):
        if int(self.iterations) != self.iterations or self.iterations < 1:
            raise ConfigError('must be a positive integer', key='iterations')
        if not self.tol >= 0:
            raise ConfigError('must be nonnegative', key='tol')
        if self.diagonal and not self.dyn.is_diagonal():
            raise ConfigError('the diagonal variant needs a diagonal B', key='B')


def restrict_increment(incr, diagonal):
    if diagonal:
        return np.diag(np.diag(incr))
    return incr


def vb_sweeps(V_pred, nu, T, C, e, P_pred, m_pred, outer_residual, cfg):
    """
        Fixed-point sweeps shared by the linear and the nonlinear update.

        Each sweep: S = T + V / (nu - d - 1), K = C S^-1, m = m- + K e,
        P = P- - K S K^T, then V = V- + outer_residual(m, P) evaluated at the
        newest (m, P). Stops after cfg.iterations sweeps or once the
        Frobenius change of V drops below cfg.tol.
    """
    d = V_pred.shape[0]
    excess = nu - d - 1
    V = V_pred
    delta = np.inf
    i = 0
    for i in range(1, cfg.iterations + 1):
        S = ensure_spd(T + V / excess, name='innovation covariance')
        K = kalman_gain(C, S)
        m = m_pred + K @ e
        P = ensure_spd(P_pred - K @ S @ K.T, name='updated covariance')

        incr = restrict_increment(outer_residual(m, P), cfg.diagonal)
        V_new = symmetrize(V_pred + incr)
        delta = frobenius(V_new - V)
        V = V_new
        if delta < cfg.tol:
            break

    diag = UpdateDiagnostics(iterations_run=i, final_delta=delta,
                             innovation=e, predicted_meas_cov=S)
    return m, P, V, diag


def kf_predict(state, A, Q):
    A = np.atleast_2d(A)
    m = A @ state.m
    P = ensure_spd(A @ state.P @ A.T + Q, name='predicted covariance')
    return GaussianState(m=m, P=P)


def vbakf_step(belief, y, A, H, Q, cfg):
    """
        One predict + update step of the linear adaptive Kalman filter.
        The innovation uses the predicted mean m-.
    """
    y = np.atleast_1d(np.asarray(y, dtype=np.float64))
    H = np.atleast_2d(np.asarray(H, dtype=np.float64))

    # predict
    pred = kf_predict(belief.state, np.asarray(A, dtype=np.float64), np.asarray(Q, dtype=np.float64))
    noise_pred = iw_predict(belief.noise, cfg.dyn)

    # update
    nu = noise_pred.nu + 1.0
    T = H @ pred.P @ H.T
    C = pred.P @ H.T
    e = y - H @ pred.m

    def outer_residual(m, P):
        r = y - H @ m
        return H @ P @ H.T + np.outer(r, r)

    m, P, V, diag = vb_sweeps(np.asarray(noise_pred.V), nu, T, C, e,
                              pred.P, pred.m, outer_residual, cfg)

    state = GaussianState(m=m, P=P)
    noise = InverseWishartState(nu=nu, V=V)
    return JointBelief(state=state, noise=noise), diag
