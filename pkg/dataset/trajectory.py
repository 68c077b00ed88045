import numpy as np
from scipy.interpolate import CubicSpline

from utils.errors import ConfigError


def waypoint_trajectory(waypoints, steps, dt, closed=False):
    """
        Smooth path through `waypoints` traversed in steps * dt seconds.

        Knots are placed proportionally to the chord length, so the speed is
        roughly constant. Returns positions and velocities at t = k dt,
        k = 0..steps, both of shape [steps + 1, 2].
    """
    pts = np.asarray(waypoints, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
        raise ConfigError('need at least two 2-D waypoints', key='trajectory.waypoints')
    if closed and not np.allclose(pts[0], pts[-1]):
        pts = np.vstack([pts, pts[:1]])

    chord = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    if np.any(chord == 0):
        raise ConfigError('consecutive waypoints must differ', key='trajectory.waypoints')
    duration = steps * dt
    knots = np.concatenate([[0.0], np.cumsum(chord)]) / np.sum(chord) * duration

    spline = CubicSpline(knots, pts, bc_type='periodic' if closed else 'natural')
    t = np.arange(steps + 1) * dt
    return spline(t), spline(t, 1)
