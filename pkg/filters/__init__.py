import numpy as np
from loguru import logger

from beliefs import CovarianceDynamics
from .gaussian_filter import UpdateDiagnostics, gf_predict, gf_update
from .vbakf import VbConfig, vbakf_step
from .vbagf import vbagf_predict, vbagf_update
from .run import filter_run, gf_run


def build_vb_config(cfg, scheme, diagonal=False):
    B = cfg.get('B', None)
    dyn = CovarianceDynamics(rho=cfg['rho'],
                             B=None if B is None else np.asarray(B, dtype=np.float64))
    vb_cfg = VbConfig(iterations=cfg['iterations'],
                      tol=cfg.get('tol', 1e-8),
                      diagonal=diagonal,
                      dyn=dyn,
                      scheme=scheme)
    logger.debug('VB config: N = {}, tol = {}, rho = {}, diagonal = {}'.format(
        vb_cfg.iterations, vb_cfg.tol, dyn.rho, diagonal))

    return vb_cfg
