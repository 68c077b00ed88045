from dataclasses import dataclass

import numpy as np

from utils.errors import PropagationError
from utils.linalg import symmetrize, chol_lower
from .scheme import sigma_points


@dataclass(frozen=True)
class PropagatedMoments:
    mean: np.ndarray        # [d,]
    cov: np.ndarray         # [d, d], noise-free part
    cross_cov: np.ndarray   # [n, d]


def subtract(y, mu):
    return y - mu


def weighted_mean(Y, weights):
    return weights @ Y


def _evaluate(g, x):
    y = np.atleast_1d(np.asarray(g(x), dtype=np.float64))
    if not np.all(np.isfinite(y)):
        raise PropagationError('non-finite function value at {}'.format(x), point=np.array(x))
    return y


def jacobian(g, m, scheme, hook=None, residual_fn=None):
    """Jacobian of g at m: the analytic hook if given, else central differences."""
    residual_fn = subtract if residual_fn is None else residual_fn
    m = np.atleast_1d(np.asarray(m, dtype=np.float64))
    if hook is not None:
        J = np.atleast_2d(np.asarray(hook(m), dtype=np.float64))
    else:
        steps = scheme.fd_step * (1.0 + np.abs(m))
        cols = []
        for i, h in enumerate(steps):
            e = np.zeros_like(m)
            e[i] = h
            cols.append(residual_fn(_evaluate(g, m + e), _evaluate(g, m - e)) / (2.0 * h))
        J = np.stack(cols, axis=1)
    if not np.all(np.isfinite(J)):
        raise PropagationError('non-finite Jacobian at {}'.format(m), point=m)
    return J


def propagate(g, m, P, scheme, jacobian_hook=None, mean_fn=None, residual_fn=None):
    """
        Gaussian moments of g(x), x ~ N(m, P):
        mean E[g], cov Cov[g], cross_cov Cov[x, g].

        mean_fn(Y, weights) averages the point images and residual_fn(y, mu)
        gives their deviations from that mean. Both default to the linear
        versions and are overridden for outputs that live on a circle.
    """
    mean_fn = weighted_mean if mean_fn is None else mean_fn
    residual_fn = subtract if residual_fn is None else residual_fn
    m = np.atleast_1d(np.asarray(m, dtype=np.float64))
    P = np.atleast_2d(np.asarray(P, dtype=np.float64))

    if scheme.kind == 'taylor':
        chol_lower(P)
        mean = _evaluate(g, m)
        J = jacobian(g, m, scheme, jacobian_hook, residual_fn)
        return PropagatedMoments(mean=mean,
                                 cov=symmetrize(J @ P @ J.T),
                                 cross_cov=P @ J.T)

    pts = sigma_points(m, P, scheme)
    Y = np.stack([_evaluate(g, x) for x in pts.points], axis=0)    # [M, d]
    mean = np.atleast_1d(np.asarray(mean_fn(Y, pts.mean_weights), dtype=np.float64))
    dY = np.stack([residual_fn(y, mean) for y in Y], axis=0)
    dX = pts.points - m[None, :]
    cov = (pts.cov_weights[:, None] * dY).T @ dY
    cross_cov = (pts.cov_weights[:, None] * dX).T @ dY

    return PropagatedMoments(mean=mean, cov=symmetrize(cov), cross_cov=cross_cov)


def expected_outer_residual(y, h, m, P, scheme, jacobian_hook=None, residual=None, mean_fn=None):
    """
        E[(y - h(x)) (y - h(x))^T] for x ~ N(m, P), i.e. e e^T + T with
        e = residual(y, mu) and (mu, T) the propagated moments of h.
    """
    residual = subtract if residual is None else residual
    y = np.atleast_1d(np.asarray(y, dtype=np.float64))
    mom = propagate(h, m, P, scheme, jacobian_hook, mean_fn=mean_fn, residual_fn=residual)
    e = residual(y, mom.mean)
    return symmetrize(np.outer(e, e) + mom.cov)
