import copy
import json

from loguru import logger

from utils.errors import ConfigError
from .range_only_config import range_only_config
from .bearings_only_config import bearings_only_config
from .schema import CONFIG_SCHEMA, SCHEMA_VERSION, VARIANT_KINDS, check_config


default_configs = {
    'range_only': range_only_config,
    'bearings_only': bearings_only_config,
}


def merge_config(base, override):
    """Recursive dict merge, values of `override` win."""
    merged = copy.deepcopy(base)
    for k, v in override.items():
        if isinstance(v, dict) and isinstance(merged.get(k), dict):
            merged[k] = merge_config(merged[k], v)
        else:
            merged[k] = copy.deepcopy(v)
    return merged


def load_config_file(path):
    try:
        with open(path, 'r') as f:
            doc = json.load(f)
    except OSError as e:
        raise ConfigError('cannot read {}: {}'.format(path, e), key='config') from e
    except json.JSONDecodeError as e:
        raise ConfigError('{} is not valid JSON: {}'.format(path, e), key='config') from e
    if not isinstance(doc, dict):
        raise ConfigError('{} must hold a JSON object'.format(path), key='config')
    if doc.get('schema_version') != SCHEMA_VERSION:
        raise ConfigError('unsupported schema version {!r}'.format(doc.get('schema_version')),
                          key='schema_version')
    return doc


def apply_overrides(cfg, args):
    if getattr(args, 'seed', None) is not None:
        cfg['seed'] = args.seed
    if getattr(args, 'scheme', None) is not None:
        cfg['scheme']['kind'] = args.scheme
    if getattr(args, 'rho', None) is not None:
        cfg['rho'] = args.rho
    if getattr(args, 'iters', None) is not None:
        cfg['iterations'] = args.iters
    if getattr(args, 'mc_runs', None) is not None:
        cfg['mc_runs'] = args.mc_runs
    if getattr(args, 'num_workers', None) is not None:
        cfg['num_workers'] = args.num_workers
    if getattr(args, 'out', None) is not None:
        cfg['out'] = args.out
    if getattr(args, 'format', None) is not None:
        cfg['format'] = args.format
    if getattr(args, 'diagonal', False):
        # covariance estimation restricted to the diagonal variant
        variants = ['vb_diag' if v == 'vb_full' else v for v in cfg['variants']]
        cfg['variants'] = list(dict.fromkeys(variants))
    return cfg


def build_config(args):
    """
        Defaults of the experiment, then the JSON scenario file, then the
        command-line overrides.
    """
    doc = load_config_file(args.config) if getattr(args, 'config', None) else {}
    experiment = getattr(args, 'experiment', None) or doc.get('experiment', 'range_only')
    if experiment not in default_configs:
        raise ConfigError('unknown experiment {!r}'.format(experiment), key='experiment')

    cfg = merge_config(default_configs[experiment], doc)
    cfg['experiment'] = experiment
    cfg = check_config(apply_overrides(cfg, args))

    logger.info('==============================')
    logger.info('Config: {} ...'.format(experiment.upper()))

    return cfg
