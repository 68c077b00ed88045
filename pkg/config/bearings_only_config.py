# multi-sensor bearings-only tracking with a coordinated turn model
import numpy as np


bearings_only_config = {
    'schema_version': 1,
    'experiment': 'bearings_only',
    # integration
    'scheme': {'kind': 'cubature',
               'alpha': 1.0,
               'beta': 0.0,
               'kappa': None,
               'gh_order': 3,
               'fd_step': 1e-6},
    # variants
    'variants': ['true_cov', 'fixed_diag', 'vb_full', 'vb_diag'],
    'fixed_sigmas': [round(0.1 * i, 1) for i in range(1, 31)],
    # vb
    'rho': 1.0 - float(np.exp(-3.0)),
    'B': None,
    'iterations': 5,
    'tol': 1e-8,
    'prior': {'eps': 1.0, 'sigma0_2': 0.1 ** 2},
    # run
    'steps': 500,
    'mc_runs': 50,
    'seed': 0,
    'num_workers': 1,
    # model, state (u, du, v, dv, omega)
    'dt': 0.1,
    'q_vel': 0.01,
    'q_turn': 1e-5,
    'sensors': [[-30.0, -30.0], [30.0, -30.0], [30.0, 30.0], [-30.0, 30.0]],
    'x0': [-5.0, 1.0, -5.0, 0.5, 0.05],
    'P0': [1.0, 0.1, 1.0, 0.1, 0.01 ** 2],
    'trajectory': {'kind': 'model'},
    'cov_trace': {'base_var': 0.05 ** 2,
                  'log_amplitude': 0.8,
                  'offdiag_amplitude': 0.8,
                  'period': 250.0,
                  'offdiag_period': 350.0},
    # output
    'out': 'results/bearings_only',
    'format': 'csv',
}
