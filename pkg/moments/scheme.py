from dataclasses import dataclass
from itertools import product
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.linalg import eigh_tridiagonal

from utils.errors import UnsupportedSchemeError, ConfigError
from utils.linalg import chol_lower


SCHEME_KINDS = ('taylor', 'unscented', 'cubature', 'gauss_hermite')

# CLI aliases -> scheme kind
SCHEME_ALIASES = {
    'ekf': 'taylor',
    'ukf': 'unscented',
    'ckf': 'cubature',
    'ghkf': 'gauss_hermite',
}

# scheme kind -> filter name used in variant labels
SCHEME_LABELS = {
    'taylor': 'EKF',
    'unscented': 'UKF',
    'cubature': 'CKF',
    'gauss_hermite': 'GHKF',
}


@dataclass(frozen=True)
class IntegrationScheme:
    """
        Selector and parameters of a Gaussian integration rule.

        ut_kappa=None stands for kappa = 3 - n with n the dimension being
        integrated. fd_step is the relative step of the central differences
        used by the taylor kind: h_i = fd_step * (1 + |m_i|).
    """
    kind: str = 'unscented'
    ut_alpha: float = 1.0
    ut_beta: float = 0.0
    ut_kappa: Optional[float] = None
    gh_order: int = 3
    fd_step: float = 1e-6

    def __post_init__(self):
        if self.kind not in SCHEME_KINDS:
            raise UnsupportedSchemeError('unknown integration scheme: {}'.format(self.kind))
        if int(self.gh_order) != self.gh_order or self.gh_order < 1:
            raise ConfigError('must be a positive integer', key='scheme.gh_order')
        if not self.fd_step > 0:
            raise ConfigError('must be positive', key='scheme.fd_step')

    @property
    def label(self):
        return SCHEME_LABELS[self.kind]


@dataclass(frozen=True)
class WeightedPointSet:
    points: np.ndarray          # [M, n]
    mean_weights: np.ndarray    # [M,]
    cov_weights: np.ndarray     # [M,]

    def __post_init__(self):
        if not (len(self.points) == len(self.mean_weights) == len(self.cov_weights)):
            raise ValueError('points and weights disagree in length')

    def __len__(self):
        return len(self.points)


def ut_lambda(n, scheme):
    kappa = 3.0 - n if scheme.ut_kappa is None else scheme.ut_kappa
    return scheme.ut_alpha ** 2 * (n + kappa) - n


def unscented_unit_points(n, scheme):
    lam = ut_lambda(n, scheme)
    if not n + lam > 0:
        raise ConfigError('alpha^2 (n + kappa) must be positive, got {}'.format(n + lam),
                          key='scheme.kappa')
    c = np.sqrt(n + lam)
    # [2n+1, n]: center, then +c e_i, then -c e_i
    xi = np.vstack([np.zeros((1, n)), c * np.eye(n), -c * np.eye(n)])

    wm = np.full(2 * n + 1, 1.0 / (2.0 * (n + lam)))
    wc = wm.copy()
    wm[0] = lam / (n + lam)
    wc[0] = wm[0] + (1.0 - scheme.ut_alpha ** 2 + scheme.ut_beta)
    return xi, wm, wc


def cubature_unit_points(n):
    xi = np.sqrt(n) * np.vstack([np.eye(n), -np.eye(n)])
    w = np.full(2 * n, 1.0 / (2 * n))
    return xi, w, w.copy()


@lru_cache(maxsize=32)
def hermite_nodes(order):
    """
        Nodes and weights of the probabilists' Gauss-Hermite rule, from the
        eigen decomposition of the Jacobi matrix (Golub-Welsch).
        Weights are normalized to the standard normal measure.
    """
    if order == 1:
        return np.zeros(1), np.ones(1)
    off = np.sqrt(np.arange(1, order, dtype=np.float64))
    nodes, vecs = eigh_tridiagonal(np.zeros(order), off)
    weights = vecs[0, :] ** 2
    # nodes are symmetric about zero
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    return nodes, weights / weights.sum()


def gauss_hermite_unit_points(n, order):
    x, w = hermite_nodes(order)
    xi = np.array(list(product(x, repeat=n)))
    wn = np.prod(np.array(list(product(w, repeat=n))), axis=1)
    return xi, wn, wn.copy()


def unit_points(n, scheme):
    if scheme.kind == 'unscented':
        return unscented_unit_points(n, scheme)
    elif scheme.kind == 'cubature':
        return cubature_unit_points(n)
    elif scheme.kind == 'gauss_hermite':
        return gauss_hermite_unit_points(n, scheme.gh_order)
    raise UnsupportedSchemeError('{} scheme has no point set'.format(scheme.kind))


def sigma_points(m, P, scheme):
    """
        Canonical point set of the scheme, translated by m and scaled by the
        lower Cholesky factor of P.
    """
    if scheme.kind == 'taylor':
        raise UnsupportedSchemeError('taylor scheme has no point set')
    m = np.atleast_1d(np.asarray(m, dtype=np.float64))
    L = chol_lower(np.atleast_2d(P))
    xi, wm, wc = unit_points(m.shape[0], scheme)
    points = m[None, :] + xi @ L.T
    return WeightedPointSet(points=points, mean_weights=wm, cov_weights=wc)
