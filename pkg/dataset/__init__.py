import numpy as np

from models.noise import NoiseFieldConfig, build_region, smooth_cov_trace
from utils.errors import ConfigError
from .simulator import SimulationResult, simulate
from .trajectory import waypoint_trajectory


def build_cov_source(cfg, model):
    if cfg['experiment'] == 'range_only':
        field = cfg['noise_field']
        return NoiseFieldConfig(
            sigma_bg2=field['sigma_bg2'],
            regions=[build_region(r) for r in field['regions']],
            line_resolution=field['line_resolution'],
            )
    trace = cfg['cov_trace']
    return smooth_cov_trace(
        steps=cfg['steps'],
        dim=model.meas_dim,
        base_var=trace['base_var'],
        log_amplitude=trace['log_amplitude'],
        offdiag_amplitude=trace['offdiag_amplitude'],
        period=trace['period'],
        offdiag_period=trace['offdiag_period'],
        )


def build_trajectory(cfg, model):
    """
        Fixed truth (x0, [K, n] states) from waypoints, or (x0, None) when the
        trajectory is sampled from the dynamic model.
    """
    traj = cfg['trajectory']
    if traj['kind'] == 'model':
        return np.asarray(cfg['x0'], dtype=np.float64), None
    if traj['kind'] != 'waypoints':
        raise ConfigError('unknown trajectory kind: {}'.format(traj['kind']), key='trajectory.kind')
    if model.state_dim != 4:
        raise ConfigError('waypoint trajectories need the (u, v, du, dv) layout', key='trajectory')

    pos, vel = waypoint_trajectory(traj['waypoints'], cfg['steps'], cfg['dt'],
                                   closed=traj.get('closed', False))
    states = np.hstack([pos, vel])
    return states[0], states[1:]


def build_dataset(cfg, model, sensors, seed, cov_source=None):
    """Simulate one Monte-Carlo run of the configured scenario."""
    if cov_source is None:
        cov_source = build_cov_source(cfg, model)
    x0, trajectory = build_trajectory(cfg, model)

    return simulate(model, sensors, cov_source, cfg['steps'], seed, x0, trajectory=trajectory)
