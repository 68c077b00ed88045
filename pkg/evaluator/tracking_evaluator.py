from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from loguru import logger


def rmse(truth, estimates, components):
    """sqrt(mean_k ||truth_k[c] - estimates_k[c]||^2) over the component set c."""
    truth = np.asarray(truth, dtype=np.float64)
    estimates = np.asarray(estimates, dtype=np.float64)
    if truth.shape[0] != estimates.shape[0]:
        raise ValueError('{} true states but {} estimates'.format(len(truth), len(estimates)))
    err = position_errors(truth, estimates, components)
    return float(np.sqrt(np.mean(err ** 2)))


def position_errors(truth, estimates, components):
    """Euclidean error per step restricted to `components`."""
    idx = list(components)
    diff = np.asarray(truth)[:, idx] - np.asarray(estimates)[:, idx]
    return np.sqrt(np.sum(diff ** 2, axis=1))


@dataclass
class RunResult:
    experiment: str
    steps: int
    mc_runs: int
    # one entry per (variant, param): key, label, kind, param
    variants: List[dict] = field(default_factory=list)
    # key -> [mc_runs, steps] position errors, nan rows for failed runs
    errors: Dict[str, np.ndarray] = field(default_factory=dict)
    # key -> [mc_runs] per-run position RMSE, nan for failed runs
    run_rmse: Dict[str, np.ndarray] = field(default_factory=dict)
    # key -> [steps] RMSE across the successful runs
    step_rmse: Dict[str, np.ndarray] = field(default_factory=dict)
    # rows: variant, param, rmse_mean, rmse_std, runs_ok
    summary: List[dict] = field(default_factory=list)
    mean_iterations: Dict[str, float] = field(default_factory=dict)
    # true and estimated Sigma_k of the first run, [steps, d, d]
    cov_true: Optional[np.ndarray] = None
    cov_est: Optional[np.ndarray] = None
    cov_variant: Optional[str] = None

    @property
    def failures(self):
        return {row['key']: self.mc_runs - row['runs_ok'] for row in self.summary}


def summarize(errors):
    """Per-run RMSE, mean, sample std and number of successful runs."""
    per_run = np.sqrt(np.mean(errors ** 2, axis=1))
    ok = per_run[np.isfinite(per_run)]
    mean = float(np.mean(ok)) if len(ok) else float('nan')
    std = float(np.std(ok, ddof=1)) if len(ok) > 1 else 0.0
    return per_run, mean, std, len(ok)


def aggregate(cfg, variants, records):
    """Reduce per-run records (ordered by run index) into a RunResult."""
    records = sorted(records, key=lambda r: r['index'])
    steps, mc_runs = cfg['steps'], len(records)
    result = RunResult(experiment=cfg['experiment'], steps=steps, mc_runs=mc_runs)

    for v in variants:
        errors = np.full((mc_runs, steps), np.nan)
        iterations = []
        for i, rec in enumerate(records):
            e = rec['errors'].get(v.key)
            if e is not None:
                errors[i] = e
                iterations.append(rec['iterations'][v.key])

        per_run, mean, std, runs_ok = summarize(errors)
        if runs_ok < mc_runs:
            logger.warning('{}: {} of {} runs failed and are excluded'.format(
                v.key, mc_runs - runs_ok, mc_runs))

        result.variants.append({'key': v.key, 'label': v.label, 'kind': v.kind, 'param': v.param})
        result.errors[v.key] = errors
        result.run_rmse[v.key] = per_run
        with np.errstate(invalid='ignore'):
            ok = np.isfinite(per_run)
            result.step_rmse[v.key] = (np.sqrt(np.mean(errors[ok] ** 2, axis=0)) if ok.any()
                                       else np.full(steps, np.nan))
        result.mean_iterations[v.key] = float(np.mean(iterations)) if iterations else float('nan')
        result.summary.append({'key': v.key, 'variant': v.label, 'param': v.param,
                               'rmse_mean': mean, 'rmse_std': std, 'runs_ok': runs_ok})

    # covariance tracking of the first run, full estimate preferred
    if records:
        first = records[0]
        result.cov_true = np.asarray(first['true_cov'])
        for kind in ('vb_full', 'vb_diag'):
            cands = [v.key for v in variants
                     if v.kind == kind and first['cov_estimates'].get(v.key) is not None]
            if cands:
                result.cov_variant = cands[0]
                result.cov_est = np.asarray(first['cov_estimates'][cands[0]])
                break

    for row in result.summary:
        logger.info('{:>14s}  rmse: {:.4f} +- {:.4f}  ({} runs)'.format(
            row['key'], row['rmse_mean'], row['rmse_std'], row['runs_ok']))
    return result
