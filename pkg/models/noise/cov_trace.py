from dataclasses import dataclass

import numpy as np

from utils.errors import InvalidCovarianceError
from utils.linalg import chol_lower, symmetrize


@dataclass(frozen=True)
class TrueCovTrace:
    covs: np.ndarray    # [K, d, d]

    def __post_init__(self):
        covs = np.array(self.covs, dtype=np.float64, ndmin=3)
        if covs.shape[1] != covs.shape[2]:
            raise InvalidCovarianceError('trace entries must be square, got {}'.format(covs.shape[1:]))
        for k, C in enumerate(covs):
            if np.max(np.abs(C - C.T)) > 1e-10 * max(1.0, np.max(np.abs(C))):
                raise InvalidCovarianceError('trace entry {} is not symmetric'.format(k))
            chol_lower(C)
        covs.setflags(write=False)
        object.__setattr__(self, 'covs', covs)

    def __len__(self):
        return len(self.covs)

    def __getitem__(self, k):
        return self.covs[k]

    @property
    def dim(self):
        return self.covs.shape[1]


def smooth_cov_trace(steps, dim, base_var=0.01, log_amplitude=0.5, offdiag_amplitude=0.5,
                     period=500.0, offdiag_period=700.0):
    """
        Sigma_k = L_k L_k^T with a smoothly varying lower-triangular L_k:

        L_ii = sqrt(b_i) exp(a/2 sin(2 pi k / period + phi_i))
        L_ij = c sqrt(b_i) sin(2 pi k / offdiag_period + phi_ij),  i > j

        Phases are fixed fractions of a turn so the trace is deterministic.
    """
    base = np.broadcast_to(np.asarray(base_var, dtype=np.float64), (dim,))
    scale = np.sqrt(base)
    k = np.arange(steps, dtype=np.float64)

    covs = np.empty((steps, dim, dim))
    for t in range(steps):
        L = np.zeros((dim, dim))
        for i in range(dim):
            phi = 2.0 * np.pi * i / dim
            L[i, i] = scale[i] * np.exp(0.5 * log_amplitude * np.sin(2.0 * np.pi * k[t] / period + phi))
            for j in range(i):
                phi = np.pi * (i + j) / dim
                L[i, j] = offdiag_amplitude * scale[i] * np.sin(2.0 * np.pi * k[t] / offdiag_period + phi)
        covs[t] = symmetrize(L @ L.T)

    return TrueCovTrace(covs=covs)
