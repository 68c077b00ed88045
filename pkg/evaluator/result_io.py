import csv
import json
import os

import numpy as np

from utils.errors import VbakfError
from .tracking_evaluator import RunResult


class ResultIOError(VbakfError, OSError):
    pass


def _writer(f):
    return csv.writer(f, lineterminator='\n', quoting=csv.QUOTE_MINIMAL)


def _cell(x):
    if x is None:
        return ''
    return repr(float(x))


def _pairs(d):
    return [(i, j) for i in range(d) for j in range(i, d)]


def write_summary(result, path):
    with open(path, 'w', newline='') as f:
        w = _writer(f)
        w.writerow(['variant', 'param', 'rmse_mean', 'rmse_std', 'runs_ok'])
        for row in result.summary:
            w.writerow([row['variant'], _cell(row['param']), _cell(row['rmse_mean']),
                        _cell(row['rmse_std']), row['runs_ok']])


def write_trace(result, path):
    """Per-run, per-step position error of every variant."""
    keys = [v['key'] for v in result.variants]
    with open(path, 'w', newline='') as f:
        w = _writer(f)
        w.writerow(['run', 'step'] + keys)
        for r in range(result.mc_runs):
            for k in range(result.steps):
                w.writerow([r, k + 1] + [_cell(result.errors[key][r, k]) for key in keys])


def write_cov_trace(result, path):
    if result.cov_true is None:
        return
    d = result.cov_true.shape[1]
    header = ['step']
    for i, j in _pairs(d):
        header += ['sigma_{}_{}_true'.format(i + 1, j + 1), 'sigma_{}_{}_est'.format(i + 1, j + 1)]
    with open(path, 'w', newline='') as f:
        w = _writer(f)
        w.writerow(header)
        for k in range(len(result.cov_true)):
            row = [k + 1]
            for i, j in _pairs(d):
                est = None if result.cov_est is None else result.cov_est[k, i, j]
                row += [_cell(result.cov_true[k, i, j]), _cell(est)]
            w.writerow(row)


def _array(x):
    return None if x is None else np.asarray(x).tolist()


def result_to_dict(result):
    return {
        'experiment': result.experiment,
        'steps': result.steps,
        'mc_runs': result.mc_runs,
        'variants': result.variants,
        'errors': {k: _array(v) for k, v in result.errors.items()},
        'run_rmse': {k: _array(v) for k, v in result.run_rmse.items()},
        'step_rmse': {k: _array(v) for k, v in result.step_rmse.items()},
        'summary': result.summary,
        'mean_iterations': result.mean_iterations,
        'cov_true': _array(result.cov_true),
        'cov_est': _array(result.cov_est),
        'cov_variant': result.cov_variant,
    }


def result_from_dict(doc):
    def arrays(d):
        return {k: np.asarray(v, dtype=np.float64) for k, v in d.items()}

    return RunResult(
        experiment=doc['experiment'],
        steps=doc['steps'],
        mc_runs=doc['mc_runs'],
        variants=doc['variants'],
        errors=arrays(doc['errors']),
        run_rmse=arrays(doc['run_rmse']),
        step_rmse=arrays(doc['step_rmse']),
        summary=doc['summary'],
        mean_iterations=doc['mean_iterations'],
        cov_true=None if doc['cov_true'] is None else np.asarray(doc['cov_true'], dtype=np.float64),
        cov_est=None if doc['cov_est'] is None else np.asarray(doc['cov_est'], dtype=np.float64),
        cov_variant=doc['cov_variant'],
        )


def emit(result, fmt, path):
    """
        csv:  summary.csv, trace.csv, cov_trace.csv under the directory `path`
        json: result.json under `path`
        Returns the written file paths.
    """
    try:
        os.makedirs(path, exist_ok=True)
        if fmt == 'csv':
            files = [os.path.join(path, name) for name in ('summary.csv', 'trace.csv', 'cov_trace.csv')]
            write_summary(result, files[0])
            write_trace(result, files[1])
            write_cov_trace(result, files[2])
            return [p for p in files if os.path.exists(p)]
        elif fmt == 'json':
            out = os.path.join(path, 'result.json')
            with open(out, 'w') as f:
                json.dump(result_to_dict(result), f)
            return [out]
    except OSError as e:
        raise ResultIOError('cannot write results to {}: {}'.format(path, e)) from e
    raise ValueError('unknown output format: {}'.format(fmt))


def load_result(path):
    """Reload a RunResult written by emit(..., 'json', ...)."""
    if os.path.isdir(path):
        path = os.path.join(path, 'result.json')
    try:
        with open(path, 'r') as f:
            return result_from_dict(json.load(f))
    except OSError as e:
        raise ResultIOError('cannot read {}: {}'.format(path, e)) from e
