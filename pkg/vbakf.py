import argparse
import json
import os
import sys

from loguru import logger

from config import build_config, CONFIG_SCHEMA
from engine import run_experiment
from evaluator import emit
from moments import SCHEME_ALIASES
from utils.errors import ConfigError
from utils.misc import setup_logger


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description='VB adaptive Gaussian filter experiments')
    parser.add_argument('--log_level', default='INFO', type=str,
                        help='loguru level: DEBUG, INFO, WARNING')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='run a Monte-Carlo battery of an experiment')
    run.add_argument('--config', default=None, type=str,
                     help='JSON scenario file')
    run.add_argument('-e', '--experiment', default=None, choices=['range_only', 'bearings_only'],
                     help='experiment when no config file names one')
    run.add_argument('--seed', default=None, type=int,
                     help='base seed, run i uses seed + i')
    run.add_argument('--scheme', default=None, choices=sorted(SCHEME_ALIASES),
                     help='Gaussian integration: ekf, ukf, ckf, ghkf')
    run.add_argument('--rho', default=None, type=float,
                     help='forgetting factor of the noise covariance, 0 < rho <= 1')
    run.add_argument('--iters', default=None, type=int,
                     help='VB fixed-point iterations per measurement')
    run.add_argument('--mc-runs', dest='mc_runs', default=None, type=int,
                     help='number of Monte-Carlo runs')
    run.add_argument('--num_workers', default=None, type=int,
                     help='processes used for the Monte-Carlo runs')
    run.add_argument('--out', default=None, type=str,
                     help='output directory')
    run.add_argument('--format', default=None, choices=['csv', 'json'],
                     help='output format')
    run.add_argument('--diagonal', action='store_true', default=False,
                     help='estimate only the diagonal of the noise covariance')

    sub.add_parser('schema', help='print the scenario config schema')

    return parser.parse_args(argv)


def run(args):
    logger.info('Setting Arguments.. : {}'.format(vars(args)))
    try:
        cfg = build_config(args)
        result = run_experiment(cfg)
    except ConfigError as e:
        logger.error('config error: {}'.format(e))
        return EXIT_CONFIG

    files = emit(result, cfg['format'], cfg['out'])
    for path in files:
        logger.info('wrote {}'.format(os.path.abspath(path)))

    failed = [row['key'] for row in result.summary if row['runs_ok'] == 0]
    if failed:
        logger.error('every run failed for: {}'.format(', '.join(failed)))
        return EXIT_NUMERICAL
    return EXIT_OK


def main(argv=None):
    args = parse_args(argv)
    setup_logger(args.log_level)

    if args.command == 'schema':
        print(json.dumps(CONFIG_SCHEMA, indent=2))
        return EXIT_OK
    return run(args)


if __name__ == '__main__':
    sys.exit(main())
