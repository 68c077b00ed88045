import numpy as np

from utils.errors import NumericalFailureError, VbakfError
from .gaussian_filter import gf_predict, gf_update
from .vbagf import vbagf_predict, vbagf_update


def _check_data(model, data):
    data = np.asarray(data, dtype=np.float64)
    if data.ndim == 1:
        data = data[:, None]
    if len(data) == 0:
        raise ValueError('measurement sequence is empty')
    if data.shape[1] != model.meas_dim:
        raise ValueError('measurements of dim {} do not match model meas_dim {}'.format(
            data.shape[1], model.meas_dim))
    return data


def _at_step(err, k):
    if isinstance(err, NumericalFailureError):
        err.step = k
        return err
    wrapped = NumericalFailureError(str(err), step=k)
    wrapped.__cause__ = err
    return wrapped


def filter_run(model, data, initial, cfg):
    """
        Adaptive filter over y_1..y_K: predict then update for every
        measurement. Returns a list of (JointBelief, UpdateDiagnostics).
    """
    data = _check_data(model, data)
    belief = initial
    outputs = []
    for k, y in enumerate(data):
        try:
            belief = vbagf_predict(belief, model.f, model.Q, cfg, model.f_jacobian)
            belief, diag = vbagf_update(belief, y, model.h, cfg,
                                        model.h_jacobian, model.residual, model.mean_fn)
        except VbakfError as e:
            raise _at_step(e, k) from e
        outputs.append((belief, diag))

    return outputs


def gf_run(model, data, initial, covs, scheme):
    """
        Gaussian filter with known noise covariances: covs is either one
        matrix or a sequence with one matrix per measurement.
    """
    data = _check_data(model, data)
    covs = np.asarray(covs, dtype=np.float64)
    if covs.ndim == 2:
        covs = np.broadcast_to(covs, (len(data),) + covs.shape)
    if len(covs) != len(data):
        raise ValueError('{} covariances for {} measurements'.format(len(covs), len(data)))

    state = initial
    outputs = []
    for k, (y, Sigma) in enumerate(zip(data, covs)):
        try:
            state = gf_predict(state, model.f, model.Q, scheme, model.f_jacobian)
            state, diag = gf_update(state, y, model.h, Sigma, scheme,
                                    model.h_jacobian, model.residual, model.mean_fn)
        except VbakfError as e:
            raise _at_step(e, k) from e
        outputs.append((state, diag))

    return outputs
