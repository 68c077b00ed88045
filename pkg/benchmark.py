import argparse
import time

from beliefs import build_belief
from config import build_config
from dataset import build_dataset
from filters import build_vb_config, vbagf_predict, vbagf_update
from models import build_model
from moments import IntegrationScheme, SCHEME_KINDS
from utils.misc import setup_logger


def parse_args():
    parser = argparse.ArgumentParser(description='VB adaptive filter step timing')
    parser.add_argument('--config', default=None, type=str,
                        help='JSON scenario file')
    parser.add_argument('-e', '--experiment', default='bearings_only', type=str,
                        help='range_only or bearings_only')
    parser.add_argument('--steps', default=200, type=int,
                        help='measurements timed per scheme')
    parser.add_argument('--iters', default=None, type=int,
                        help='VB iterations per measurement')
    parser.add_argument('--seed', default=None, type=int,
                        help='simulation seed')

    return parser.parse_args()


def test(model, sim, cfg, scheme):
    vb_cfg = build_vb_config(cfg, scheme)
    belief = build_belief(cfg, model, sim.x0)
    total_time = 0.0
    for y in sim.measurements:
        start_time = time.perf_counter()
        belief = vbagf_predict(belief, model.f, model.Q, vb_cfg, model.f_jacobian)
        belief, _ = vbagf_update(belief, y, model.h, vb_cfg, model.h_jacobian,
                                 model.residual, model.mean_fn)
        total_time += time.perf_counter() - start_time

    return total_time / len(sim.measurements)


if __name__ == '__main__':
    args = parse_args()
    setup_logger('WARNING')
    cfg = build_config(args)
    cfg['steps'] = args.steps
    model, sensors = build_model(cfg)
    sim = build_dataset(cfg, model, sensors, cfg['seed'])

    for kind in SCHEME_KINDS:
        elapsed = test(model, sim, cfg, IntegrationScheme(kind=kind))
        print('- {:<14s}: {:8.3f} ms / step, {:8.1f} steps/s'.format(
            kind, 1e3 * elapsed, 1.0 / elapsed))
