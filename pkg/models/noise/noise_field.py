from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.spatial.distance import cdist

from utils.errors import ConfigError
from utils.linalg import ensure_spd
from .regions import NoiseRegion


# squared distance under which two discretized points are the same point
COINCIDE_TOL = 1e-18


@dataclass(frozen=True)
class NoiseFieldConfig:
    sigma_bg2: float
    regions: Tuple[NoiseRegion, ...] = ()
    line_resolution: float = 10.0   # points per unit length

    def __post_init__(self):
        if not self.sigma_bg2 > 0:
            raise ConfigError('background variance must be positive', key='noise_field.sigma_bg2')
        if not self.line_resolution >= 1:
            raise ConfigError('must be at least 1', key='noise_field.line_resolution')
        object.__setattr__(self, 'regions', tuple(self.regions))


def line_points(start, end, resolution):
    """
        Midpoints of ceil(length * resolution) equal pieces of the segment.
        A zero-length segment is a single point.
    """
    start = np.asarray(start, dtype=np.float64)
    end = np.asarray(end, dtype=np.float64)
    length = np.linalg.norm(end - start)
    n = max(1, int(np.ceil(length * resolution)))
    t = (np.arange(n) + 0.5) / n
    return start[None, :] + t[:, None] * (end - start)[None, :]


def _line_cov(Pi, Pj, cfg):
    """Field covariance of two lines, averaged over their point pairs."""
    D2 = cdist(Pi, Pj, 'sqeuclidean')
    same = D2 <= COINCIDE_TOL
    # white terms: coincident pairs, normalized so a line's own variance is resolution-free
    norm = np.sqrt(len(Pi) * len(Pj))
    val = cfg.sigma_bg2 * same.sum() / norm
    for reg in cfg.regions:
        mask = np.outer(reg.shape.contains(Pi), reg.shape.contains(Pj))
        if not mask.any():
            continue
        val += reg.sigma_bg2 * (same & mask).sum() / norm
        val += reg.sigma_magn2 * np.mean(mask * np.exp(-D2 / reg.length_scale ** 2))
    return val


def noise_field_cov(target, sensors, cfg):
    """
        Measurement noise covariance induced by the field along the
        sensor-to-target segments.
    """
    target = np.asarray(target, dtype=np.float64)
    lines = [line_points(s, target, cfg.line_resolution) for s in sensors.positions]
    d = len(lines)
    Sigma = np.zeros((d, d))
    for i in range(d):
        for j in range(i, d):
            Sigma[i, j] = Sigma[j, i] = _line_cov(lines[i], lines[j], cfg)

    return ensure_spd(Sigma, name='noise field covariance')
