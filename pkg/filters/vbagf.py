import numpy as np

from beliefs import JointBelief, InverseWishartState, GaussianState, iw_predict
from moments import propagate, expected_outer_residual
from moments.propagate import subtract
from .gaussian_filter import gf_predict
from .vbakf import vb_sweeps


def vbagf_predict(belief, f, Q, cfg, jacobian=None):
    state = gf_predict(belief.state, f, Q, cfg.scheme, jacobian)
    noise = iw_predict(belief.noise, cfg.dyn)
    return JointBelief(state=state, noise=noise)


def vbagf_update(belief, y, h, cfg, jacobian=None, residual=None, mean_fn=None):
    """
        Variational update of the joint belief.

        mu, T, C are computed once at the predicted state; only S, K, P and
        V change between sweeps.
    """
    residual = subtract if residual is None else residual
    y = np.atleast_1d(np.asarray(y, dtype=np.float64))
    pred = belief.state
    mom = propagate(h, pred.m, pred.P, cfg.scheme, jacobian,
                    mean_fn=mean_fn, residual_fn=residual)
    e = residual(y, mom.mean)
    nu = belief.noise.nu + 1.0

    def outer_residual(m, P):
        return expected_outer_residual(y, h, m, P, cfg.scheme,
                                       jacobian_hook=jacobian, residual=residual,
                                       mean_fn=mean_fn)

    m, P, V, diag = vb_sweeps(np.asarray(belief.noise.V), nu, mom.cov, mom.cross_cov, e,
                              np.asarray(pred.P), np.asarray(pred.m), outer_residual, cfg)

    state = GaussianState(m=m, P=P)
    noise = InverseWishartState(nu=nu, V=V)
    return JointBelief(state=state, noise=noise), diag
