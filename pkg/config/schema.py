# Scenario config schema (printed by `vbakf.py schema`) and its validation.
from utils.errors import ConfigError


SCHEMA_VERSION = 1

VARIANT_KINDS = ('true_cov', 'fixed_diag', 'vb_full', 'vb_diag')

_number = {'type': 'number'}
_matrix = {'type': 'array', 'items': {'type': 'array', 'items': _number}}
_points = {'type': 'array', 'items': {'type': 'array', 'items': _number, 'minItems': 2, 'maxItems': 2}}

CONFIG_SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'title': 'vbakf scenario',
    'type': 'object',
    'required': ['schema_version'],
    'properties': {
        'schema_version': {'const': SCHEMA_VERSION},
        'experiment': {'enum': ['range_only', 'bearings_only']},
        'scheme': {
            'type': 'object',
            'properties': {
                'kind': {'enum': ['taylor', 'unscented', 'cubature', 'gauss_hermite',
                                  'ekf', 'ukf', 'ckf', 'ghkf']},
                'alpha': _number,
                'beta': _number,
                'kappa': {'type': ['number', 'null'], 'description': 'null means 3 - n'},
                'gh_order': {'type': 'integer', 'minimum': 1},
                'fd_step': {'type': 'number', 'exclusiveMinimum': 0},
            },
        },
        'variants': {'type': 'array', 'items': {'enum': list(VARIANT_KINDS)}},
        'fixed_sigmas': {'type': 'array', 'items': {'type': 'number', 'exclusiveMinimum': 0}},
        'rho': {'type': 'number', 'exclusiveMinimum': 0, 'maximum': 1},
        'B': {'oneOf': [_matrix, {'type': 'null'}], 'description': 'null means sqrt(rho) I'},
        'iterations': {'type': 'integer', 'minimum': 1},
        'tol': {'type': 'number', 'minimum': 0},
        'prior': {'type': 'object',
                  'properties': {'eps': {'type': 'number', 'exclusiveMinimum': 0},
                                 'sigma0_2': {'type': 'number', 'exclusiveMinimum': 0}}},
        'steps': {'type': 'integer', 'minimum': 1},
        'mc_runs': {'type': 'integer', 'minimum': 1},
        'seed': {'type': 'integer', 'minimum': 0, 'maximum': 2 ** 64 - 1},
        'num_workers': {'type': 'integer', 'minimum': 1},
        'dt': {'type': 'number', 'exclusiveMinimum': 0},
        'q': {'type': 'number', 'exclusiveMinimum': 0, 'description': 'range_only'},
        'q_vel': {'type': 'number', 'minimum': 0, 'description': 'bearings_only'},
        'q_turn': {'type': 'number', 'minimum': 0, 'description': 'bearings_only'},
        'sensors': _points,
        'x0': {'type': 'array', 'items': _number},
        'm0': {'type': 'array', 'items': _number},
        'P0': {'oneOf': [{'type': 'array', 'items': _number}, _matrix]},
        'trajectory': {
            'type': 'object',
            'properties': {'kind': {'enum': ['waypoints', 'model']},
                           'closed': {'type': 'boolean'},
                           'waypoints': _points},
        },
        'noise_field': {
            'type': 'object',
            'properties': {
                'sigma_bg2': {'type': 'number', 'exclusiveMinimum': 0},
                'line_resolution': {'type': 'number', 'minimum': 1},
                'regions': {'type': 'array', 'items': {
                    'type': 'object',
                    'properties': {'shape': {'enum': ['rect', 'circle']},
                                   'bounds': {'type': 'array', 'items': _number,
                                              'description': 'u_min, u_max, v_min, v_max'},
                                   'center': {'type': 'array', 'items': _number},
                                   'radius': {'type': 'number', 'exclusiveMinimum': 0},
                                   'sigma_bg2': {'type': 'number', 'exclusiveMinimum': 0},
                                   'sigma_magn2': {'type': 'number', 'exclusiveMinimum': 0},
                                   'length_scale': {'type': 'number', 'exclusiveMinimum': 0}}}},
            },
        },
        'cov_trace': {
            'type': 'object',
            'properties': {'base_var': {'oneOf': [_number, {'type': 'array', 'items': _number}]},
                           'log_amplitude': _number,
                           'offdiag_amplitude': _number,
                           'period': {'type': 'number', 'exclusiveMinimum': 0},
                           'offdiag_period': {'type': 'number', 'exclusiveMinimum': 0}},
        },
        'out': {'type': 'string'},
        'format': {'enum': ['csv', 'json']},
    },
}


def _positive(cfg, key, integer=False):
    value = cfg.get(key)
    if integer and (not isinstance(value, int) or isinstance(value, bool)):
        raise ConfigError('must be an integer, got {!r}'.format(value), key=key)
    if not isinstance(value, (int, float)) or not value > 0:
        raise ConfigError('must be positive, got {!r}'.format(value), key=key)


def check_config(cfg):
    """Validate a merged scenario config, ConfigError names the offending key."""
    if cfg.get('schema_version') != SCHEMA_VERSION:
        raise ConfigError('unsupported schema version {!r}'.format(cfg.get('schema_version')),
                          key='schema_version')
    if cfg.get('experiment') not in ('range_only', 'bearings_only'):
        raise ConfigError('unknown experiment {!r}'.format(cfg.get('experiment')), key='experiment')

    for key in ('steps', 'mc_runs', 'iterations', 'num_workers'):
        _positive(cfg, key, integer=True)
    for key in ('dt',):
        _positive(cfg, key)
    if cfg['experiment'] == 'range_only':
        _positive(cfg, 'q')

    seed = cfg.get('seed')
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2 ** 64:
        raise ConfigError('must be a 64-bit unsigned integer, got {!r}'.format(seed), key='seed')
    rho = cfg.get('rho')
    if not isinstance(rho, (int, float)) or not 0 < rho <= 1:
        raise ConfigError('must lie in (0, 1], got {!r}'.format(rho), key='rho')
    if not cfg.get('tol', 0) >= 0:
        raise ConfigError('must be nonnegative', key='tol')

    for v in cfg.get('variants', []):
        if v not in VARIANT_KINDS:
            raise ConfigError('unknown variant {!r}'.format(v), key='variants')
    if 'fixed_diag' in cfg.get('variants', []):
        sigmas = cfg.get('fixed_sigmas') or []
        if not sigmas or any(not s > 0 for s in sigmas):
            raise ConfigError('need a non-empty list of positive sigmas', key='fixed_sigmas')

    if not cfg.get('sensors'):
        raise ConfigError('at least one sensor is required', key='sensors')
    if cfg.get('format') not in ('csv', 'json'):
        raise ConfigError('must be csv or json, got {!r}'.format(cfg.get('format')), key='format')

    return cfg
