from loguru import logger

from .scheme import (IntegrationScheme, WeightedPointSet, SCHEME_ALIASES, SCHEME_KINDS,
                     SCHEME_LABELS, sigma_points, hermite_nodes)
from .propagate import PropagatedMoments, propagate, jacobian, expected_outer_residual


def build_scheme(cfg):
    scheme_cfg = cfg['scheme']
    kind = SCHEME_ALIASES.get(scheme_cfg['kind'], scheme_cfg['kind'])
    scheme = IntegrationScheme(
        kind=kind,
        ut_alpha=scheme_cfg.get('alpha', 1.0),
        ut_beta=scheme_cfg.get('beta', 0.0),
        ut_kappa=scheme_cfg.get('kappa', None),
        gh_order=scheme_cfg.get('gh_order', 3),
        fd_step=scheme_cfg.get('fd_step', 1e-6),
        )
    logger.info('==============================')
    logger.info('Integration scheme: {}'.format(scheme))

    return scheme
