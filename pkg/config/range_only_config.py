# range-only tracking in a non-homogeneous noise field
import numpy as np


range_only_config = {
    'schema_version': 1,
    'experiment': 'range_only',
    # integration
    'scheme': {'kind': 'unscented',
               'alpha': 1.0,
               'beta': 0.0,
               'kappa': None,   # 3 - n
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
    'steps': 1000,
    'mc_runs': 50,
    'seed': 0,
    'num_workers': 1,
    # model
    'dt': 0.01,
    'q': 2.0,
    'sensors': [[0.0, 0.0], [8.0, 0.0], [4.0, 7.0]],
    'P0': [0.1 ** 2, 0.1 ** 2, 1.0, 1.0],
    'trajectory': {'kind': 'waypoints',
                   'closed': True,
                   'waypoints': [[2.0, 1.5], [6.0, 1.5], [6.5, 4.0],
                                 [4.0, 5.5], [1.5, 4.0]]},
    'noise_field': {'sigma_bg2': 0.01 ** 2,
                    'line_resolution': 10.0,
                    'regions': [
                        # lightly shaded
                        {'shape': 'rect', 'bounds': [3.0, 7.0, 0.5, 3.5],
                         'sigma_bg2': 0.01 ** 2, 'sigma_magn2': 0.1 ** 2, 'length_scale': 2.0},
                        # darkly shaded
                        {'shape': 'circle', 'center': [3.0, 4.5], 'radius': 1.5,
                         'sigma_bg2': 0.01 ** 2, 'sigma_magn2': 0.2 ** 2, 'length_scale': 2.0},
                    ]},
    # output
    'out': 'results/range_only',
    'format': 'csv',
}
