# Coordinated turn, state (u, du, v, dv, omega).
import numpy as np


# below this |omega| the turn terms use their Taylor expansions
TURN_RATE_EPS = 1e-4


def _turn_terms(w, dt):
    """a = sin(w dt)/w, b = (1 - cos(w dt))/w and their derivatives in w."""
    if abs(w) < TURN_RATE_EPS:
        a = dt - w ** 2 * dt ** 3 / 6.0
        b = w * dt ** 2 / 2.0 - w ** 3 * dt ** 4 / 24.0
        da = -w * dt ** 3 / 3.0
        db = dt ** 2 / 2.0 - w ** 2 * dt ** 4 / 8.0
    else:
        s, c = np.sin(w * dt), np.cos(w * dt)
        a = s / w
        b = (1.0 - c) / w
        da = (dt * c * w - s) / w ** 2
        db = (dt * s * w - (1.0 - c)) / w ** 2
    return a, b, da, db


def coordinated_turn_matrix(w, dt):
    a, b, _, _ = _turn_terms(w, dt)
    s, c = np.sin(w * dt), np.cos(w * dt)
    return np.array([
        [1.0, a,   0.0, -b,  0.0],
        [0.0, c,   0.0, -s,  0.0],
        [0.0, b,   1.0, a,   0.0],
        [0.0, s,   0.0, c,   0.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
    ])


def coordinated_turn_f(x, dt):
    x = np.asarray(x, dtype=np.float64)
    return coordinated_turn_matrix(x[4], dt) @ x


def coordinated_turn_jacobian(x, dt):
    x = np.asarray(x, dtype=np.float64)
    _, du, _, dv, w = x
    _, _, da, db = _turn_terms(w, dt)
    s, c = np.sin(w * dt), np.cos(w * dt)

    J = coordinated_turn_matrix(w, dt)
    # d/d omega column
    J[0, 4] = da * du - db * dv
    J[1, 4] = -dt * s * du - dt * c * dv
    J[2, 4] = db * du + da * dv
    J[3, 4] = dt * c * du - dt * s * dv
    return J


def coordinated_turn_Q(q_vel, q_turn, dt):
    """Block-diagonal process noise: Wiener velocity per axis plus a turn-rate random walk."""
    block = q_vel * np.array([[dt ** 3 / 3.0, dt ** 2 / 2.0],
                              [dt ** 2 / 2.0, dt]])
    Q = np.zeros((5, 5))
    Q[0:2, 0:2] = block
    Q[2:4, 2:4] = block
    Q[4, 4] = q_turn * dt
    return Q
