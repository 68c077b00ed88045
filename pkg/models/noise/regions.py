from dataclasses import dataclass

import numpy as np

from utils.errors import ConfigError


@dataclass(frozen=True)
class RectRegion:
    u_min: float
    u_max: float
    v_min: float
    v_max: float

    def contains(self, points):
        p = np.atleast_2d(points)
        return ((p[:, 0] >= self.u_min) & (p[:, 0] <= self.u_max) &
                (p[:, 1] >= self.v_min) & (p[:, 1] <= self.v_max))


@dataclass(frozen=True)
class CircleRegion:
    u: float
    v: float
    radius: float

    def contains(self, points):
        p = np.atleast_2d(points)
        return (p[:, 0] - self.u) ** 2 + (p[:, 1] - self.v) ** 2 <= self.radius ** 2


@dataclass(frozen=True)
class NoiseRegion:
    """
        Bounded area A_i whose noise adds a white part (sigma_bg2) and a
        squared-exponential part (sigma_magn2, length_scale).
    """
    shape: object
    sigma_bg2: float
    sigma_magn2: float
    length_scale: float

    def __post_init__(self):
        if not (self.sigma_bg2 > 0 and self.sigma_magn2 > 0):
            raise ConfigError('region variances must be positive', key='noise_field.regions')
        if not self.length_scale > 0:
            raise ConfigError('length scale must be positive', key='noise_field.regions')


def build_region(cfg):
    shape = cfg['shape']
    if shape == 'rect':
        geom = RectRegion(*cfg['bounds'])
    elif shape == 'circle':
        geom = CircleRegion(*cfg['center'], cfg['radius'])
    else:
        raise ConfigError('unknown region shape: {}'.format(shape), key='noise_field.regions')

    return NoiseRegion(shape=geom,
                       sigma_bg2=cfg['sigma_bg2'],
                       sigma_magn2=cfg['sigma_magn2'],
                       length_scale=cfg['length_scale'])
