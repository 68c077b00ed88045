import numpy as np

from moments import IntegrationScheme


ALL_SCHEMES = [
    IntegrationScheme(kind='taylor'),
    IntegrationScheme(kind='unscented'),
    IntegrationScheme(kind='cubature'),
    IntegrationScheme(kind='gauss_hermite', gh_order=3),
]

POINT_SCHEMES = ALL_SCHEMES[1:]


def random_spd(rng, n, floor=0.1):
    M = rng.standard_normal((n, n))
    return M @ M.T + floor * np.eye(n)


def random_stable(rng, n):
    A = rng.standard_normal((n, n))
    return 0.9 * A / max(1.0, np.max(np.abs(np.linalg.eigvals(A))))
