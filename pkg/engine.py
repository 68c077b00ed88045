import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Optional

import numpy as np
from loguru import logger

from beliefs import build_belief, iw_expected_cov, iw_prior
from dataset import build_cov_source, build_dataset, build_trajectory
from evaluator import aggregate, position_errors
from filters import build_vb_config, filter_run, gf_run
from models import build_model
from moments import build_scheme
from utils.errors import (ConfigError, InvalidBeliefError, NumericalFailureError, PropagationError,
                          UnsupportedSchemeError)


@dataclass(frozen=True)
class Variant:
    kind: str                       # true_cov | fixed_diag | vb_full | vb_diag
    label: str                      # UKF-t, UKF-o, VB-AUKF-f, VB-AUKF-d
    param: Optional[float] = None   # sigma of fixed_diag

    @property
    def key(self):
        if self.param is None:
            return self.label
        return '{}({:g})'.format(self.label, self.param)


@dataclass
class VariantOutput:
    estimates: np.ndarray                  # [K, n] posterior means
    cov_estimates: Optional[np.ndarray]    # [K, d, d] for VB variants
    mean_iterations: float


def build_variants(cfg, scheme):
    name = scheme.label
    variants = []
    for kind in cfg['variants']:
        if kind == 'true_cov':
            variants.append(Variant(kind, '{}-t'.format(name)))
        elif kind == 'fixed_diag':
            for sigma in cfg['fixed_sigmas']:
                variants.append(Variant(kind, '{}-o'.format(name), float(sigma)))
        elif kind == 'vb_full':
            variants.append(Variant(kind, 'VB-A{}-f'.format(name)))
        elif kind == 'vb_diag':
            variants.append(Variant(kind, 'VB-A{}-d'.format(name)))
    return variants


def run_variant(variant, model, sim, cfg, scheme):
    """Track one simulated run with one filter variant."""
    belief = build_belief(cfg, model, sim.x0)
    data = sim.measurements

    if variant.kind in ('true_cov', 'fixed_diag'):
        if variant.kind == 'true_cov':
            covs = sim.covs
        else:
            covs = variant.param ** 2 * np.eye(model.meas_dim)
        outputs = gf_run(model, data, belief.state, covs, scheme)
        estimates = np.stack([s.m for s, _ in outputs])
        return VariantOutput(estimates=estimates, cov_estimates=None, mean_iterations=1.0)

    vb_cfg = build_vb_config(cfg, scheme, diagonal=(variant.kind == 'vb_diag'))
    outputs = filter_run(model, data, belief, vb_cfg)
    estimates = np.stack([b.state.m for b, _ in outputs])
    cov_estimates = np.stack([iw_expected_cov(b.noise) for b, _ in outputs])
    iterations = float(np.mean([d.iterations_run for _, d in outputs]))
    return VariantOutput(estimates=estimates, cov_estimates=cov_estimates,
                         mean_iterations=iterations)


def check_experiment(cfg):
    """
        Build the scheme, the VB settings and the initial belief once so that
        bad settings fail as ConfigError before any Monte-Carlo run.
    """
    try:
        scheme = build_scheme(cfg)
    except UnsupportedSchemeError as e:
        raise ConfigError(str(e), key='scheme.kind') from e
    model, _ = build_model(cfg)

    for variant in build_variants(cfg, scheme):
        if variant.kind not in ('vb_full', 'vb_diag'):
            continue
        try:
            vb_cfg = build_vb_config(cfg, scheme, diagonal=(variant.kind == 'vb_diag'))
            vb_cfg.dyn.matrix(model.meas_dim)
        except InvalidBeliefError as e:
            raise ConfigError(str(e), key='B') from e

    prior = cfg.get('prior', {})
    try:
        iw_prior(model.meas_dim, eps=prior.get('eps', 1.0), sigma0_2=prior.get('sigma0_2', 1.0))
    except InvalidBeliefError as e:
        raise ConfigError(str(e), key='prior') from e

    x0, _ = build_trajectory(cfg, model)
    if x0.shape != (model.state_dim,):
        raise ConfigError('initial state of shape {} for state dim {}'.format(
            x0.shape, model.state_dim), key='x0')
    try:
        belief = build_belief(cfg, model, x0)
    except InvalidBeliefError as e:
        raise ConfigError(str(e), key='P0') from e
    if belief.state.dim != model.state_dim:
        raise ConfigError('initial belief of dim {} for state dim {}'.format(
            belief.state.dim, model.state_dim), key='P0')

    return scheme


def run_one(cfg, run_index, variant_runner=run_variant):
    """
        One Monte-Carlo run: simulate once with seed + run_index, then track
        the identical measurements with every variant. A variant failing
        numerically yields None and a warning.
    """
    scheme = build_scheme(cfg)
    model, sensors = build_model(cfg)
    seed = (cfg['seed'] + run_index) % 2 ** 64
    sim = build_dataset(cfg, model, sensors, seed, cov_source=build_cov_source(cfg, model))

    record = {'index': run_index, 'true_cov': sim.covs, 'errors': {},
              'cov_estimates': {}, 'iterations': {}}
    t0 = time.time()
    for variant in build_variants(cfg, scheme):
        try:
            out = variant_runner(variant, model, sim, cfg, scheme)
        except (NumericalFailureError, PropagationError) as e:
            logger.warning('[run: {}][{}] numerical failure: {}'.format(run_index, variant.key, e))
            record['errors'][variant.key] = None
            continue
        record['errors'][variant.key] = position_errors(sim.states, out.estimates,
                                                        model.position_index)
        record['cov_estimates'][variant.key] = out.cov_estimates
        record['iterations'][variant.key] = out.mean_iterations

    logger.info('[run: {}/{}][seed: {}][time: {:.2f}]'.format(
        run_index + 1, cfg['mc_runs'], seed, time.time() - t0))
    return record


def run_experiment(cfg, variant_runner=run_variant):
    """All Monte-Carlo runs of the experiment, reduced in run-index order."""
    scheme = check_experiment(cfg)
    worker = partial(run_one, cfg, variant_runner=variant_runner)
    runs = range(cfg['mc_runs'])
    if cfg.get('num_workers', 1) > 1:
        with ProcessPoolExecutor(max_workers=cfg['num_workers']) as pool:
            records = list(pool.map(worker, runs))
    else:
        records = [worker(i) for i in runs]

    return aggregate(cfg, build_variants(cfg, scheme), records)
