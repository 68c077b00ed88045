from dataclasses import dataclass

import numpy as np
from loguru import logger

from .gaussian import GaussianState
from .inverse_wishart import (InverseWishartState, CovarianceDynamics, iw_mean_precision,
                              iw_expected_cov, iw_predict, iw_prior)


@dataclass(frozen=True)
class JointBelief:
    """Factored posterior Q_x(x) Q_Sigma(Sigma) carried between steps."""
    state: GaussianState
    noise: InverseWishartState


def build_belief(cfg, model, x0):
    """Initial joint belief: mean cfg['m0'] (default x0), cfg['P0'] and the IW prior."""
    prior = cfg.get('prior', {})
    P0 = np.asarray(cfg['P0'], dtype=np.float64)
    if P0.ndim == 1:
        P0 = np.diag(P0)
    state = GaussianState(m=np.asarray(cfg.get('m0', x0), dtype=np.float64), P=P0)
    noise = iw_prior(model.meas_dim,
                     eps=prior.get('eps', 1.0),
                     sigma0_2=prior.get('sigma0_2', 1.0))
    logger.debug('Initial belief: nu0 = {}, V0 = {} I'.format(noise.nu, noise.V[0, 0]))

    return JointBelief(state=state, noise=noise)
