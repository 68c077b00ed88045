from functools import partial

import numpy as np
import pytest

from beliefs import (GaussianState, InverseWishartState, JointBelief, CovarianceDynamics,
                     iw_prior)
from filters import (VbConfig, gf_predict, gf_update, vbakf_step, vbagf_predict, vbagf_update,
                     filter_run, gf_run, build_vb_config)
from config import default_configs
from models import AdditiveModel, build_model, linear_map, constant_matrix
from models.dynamics import wiener_velocity
from models.sensors import angle_residual, wrap_angle
from moments import IntegrationScheme, propagate
from utils.errors import ConfigError, NumericalFailureError
from tests.helpers import ALL_SCHEMES, random_spd, random_stable


UKF = IntegrationScheme(kind='unscented')


def linear_model(A, H, Q):
    return AdditiveModel(state_dim=A.shape[0], meas_dim=H.shape[0],
                         f=partial(linear_map, A=A), h=partial(linear_map, A=H), Q=Q,
                         f_jacobian=partial(constant_matrix, A=A),
                         h_jacobian=partial(constant_matrix, A=H))


def reference_vbakf(m, P, nu, V, y, A, H, Q, rho, iterations):
    """Direct transcription of the linear coupled equations, no shared code."""
    d = len(y)
    m_pred = A @ m
    P_pred = A @ P @ A.T + Q
    nu_pred = rho * (nu - d - 1) + d + 1
    V_pred = rho * V
    nu_new = nu_pred + 1.0
    V_new = V_pred
    for _ in range(iterations):
        S = H @ P_pred @ H.T + V_new / (nu_new - d - 1)
        K = P_pred @ H.T @ np.linalg.inv(S)
        m_new = m_pred + K @ (y - H @ m_pred)
        P_new = P_pred - K @ S @ K.T
        r = y - H @ m_new
        V_new = V_pred + H @ P_new @ H.T + np.outer(r, r)
    return m_new, P_new, nu_new, V_new


class TestGaussianFilter:
    def test_identity_predict(self):
        state = GaussianState(m=[1.0, -1.0], P=[[2.0, 0.1], [0.1, 1.0]])
        for scheme in ALL_SCHEMES:
            out = gf_predict(state, lambda x: x, np.zeros((2, 2)), scheme)
            np.testing.assert_allclose(out.m, state.m, atol=1e-8)
            np.testing.assert_allclose(out.P, state.P, atol=1e-8)

    @pytest.mark.parametrize('scheme', ALL_SCHEMES, ids=lambda s: s.kind)
    def test_wiener_velocity_predict(self, scheme):
        A, Q = wiener_velocity(2.0, 0.01, ndim=1)
        state = GaussianState(m=[0.3, -1.0], P=[[0.5, 0.05], [0.05, 0.2]])
        out = gf_predict(state, partial(linear_map, A=A), Q, scheme,
                         jacobian=partial(constant_matrix, A=A))
        np.testing.assert_allclose(out.m, A @ state.m, atol=1e-12)
        np.testing.assert_allclose(out.P, A @ state.P @ A.T + Q, atol=1e-12)

    def test_scalar_update(self):
        state = GaussianState(m=[0.0], P=[[1.0]])
        for scheme in ALL_SCHEMES:
            out, diag = gf_update(state, [2.0], lambda x: 2.0 * x, [[1.0]], scheme)
            assert diag.predicted_meas_cov[0, 0] == pytest.approx(5.0, abs=1e-8)
            assert out.m[0] == pytest.approx(0.8, abs=1e-8)
            assert out.P[0, 0] == pytest.approx(0.2, abs=1e-8)

    def test_identity_update_is_kalman(self):
        rng = np.random.default_rng(1)
        P = random_spd(rng, 3)
        Sigma = random_spd(rng, 3)
        m = rng.standard_normal(3)
        y = rng.standard_normal(3)
        out, _ = gf_update(GaussianState(m=m, P=P), y, lambda x: x, Sigma, UKF)
        K = P @ np.linalg.inv(P + Sigma)
        np.testing.assert_allclose(out.m, m + K @ (y - m), atol=1e-10)
        np.testing.assert_allclose(out.P, P - K @ (P + Sigma) @ K.T, atol=1e-10)

    def test_uninformative_measurement(self):
        state = GaussianState(m=[1.0, 2.0], P=[[1.0, 0.2], [0.2, 0.5]])
        out, _ = gf_update(state, [10.0, -10.0], lambda x: x, 1e12 * np.eye(2), UKF)
        np.testing.assert_allclose(out.m, state.m, rtol=1e-4)
        np.testing.assert_allclose(out.P, state.P, rtol=1e-4)


class TestVbConfig:
    def test_invalid(self):
        with pytest.raises(ConfigError):
            VbConfig(iterations=0)
        with pytest.raises(ConfigError):
            VbConfig(tol=-1.0)
        with pytest.raises(ConfigError):
            VbConfig(diagonal=True, dyn=CovarianceDynamics(B=[[0.9, 0.1], [0.0, 0.9]]))

    def test_build(self):
        cfg = build_vb_config({'rho': 0.5, 'iterations': 3}, UKF, diagonal=True)
        assert cfg.iterations == 3
        assert cfg.diagonal
        assert cfg.dyn.rho == 0.5


class TestVbUpdate:
    def test_hand_iterated(self):
        belief = JointBelief(state=GaussianState(m=[0.0], P=[[1.0]]),
                             noise=InverseWishartState(4.0, [[3.0]]))
        cfg = VbConfig(iterations=2, tol=0.0, scheme=UKF)
        out, diag = vbagf_update(belief, [1.0], lambda x: x, cfg)

        assert diag.iterations_run == 2
        assert diag.predicted_meas_cov[0, 0] == pytest.approx(2.25, abs=1e-12)
        assert out.state.m[0] == pytest.approx(4.0 / 9.0, abs=1e-12)
        assert out.state.P[0, 0] == pytest.approx(1.0 - 1.0 / 2.25, abs=1e-12)
        assert out.noise.nu == pytest.approx(5.0)
        assert out.noise.V[0, 0] == pytest.approx(3.0 + 70.0 / 81.0, abs=1e-12)

    def test_single_sweep(self):
        belief = JointBelief(state=GaussianState(m=[0.0], P=[[1.0]]),
                             noise=InverseWishartState(4.0, [[3.0]]))
        out, diag = vbagf_update(belief, [1.0], lambda x: x, VbConfig(iterations=1, scheme=UKF))
        assert diag.iterations_run == 1
        assert out.state.m[0] == pytest.approx(0.5, abs=1e-12)
        assert out.noise.V[0, 0] == pytest.approx(3.75, abs=1e-12)

    @pytest.mark.parametrize('seed', range(5))
    def test_first_sweep_is_kalman_update(self, seed):
        rng = np.random.default_rng(seed)
        n, d = 3, 2
        A, H = random_stable(rng, n), rng.standard_normal((d, n))
        Q, P, V = 0.1 * random_spd(rng, n), random_spd(rng, n), random_spd(rng, d)
        m, y = rng.standard_normal(n), rng.standard_normal(d)
        nu = d + 1.5
        belief = JointBelief(state=GaussianState(m=m, P=P), noise=InverseWishartState(nu, V))
        cfg = VbConfig(iterations=1, tol=0.0, dyn=CovarianceDynamics(rho=1.0), scheme=UKF)

        out, _ = vbakf_step(belief, y, A, H, Q, cfg)

        pred = GaussianState(m=A @ m, P=A @ P @ A.T + Q)
        ref, _ = gf_update(pred, y, partial(linear_map, A=H), V / 1.5, UKF)
        np.testing.assert_allclose(out.state.m, ref.m, atol=1e-12)
        np.testing.assert_allclose(out.state.P, ref.P, atol=1e-12)
        r = y - H @ ref.m
        np.testing.assert_allclose(out.noise.V, V + H @ ref.P @ H.T + np.outer(r, r), atol=1e-12)

    def test_zero_innovation(self):
        H = np.array([[1.0, 0.5]])
        m = np.array([0.2, 0.4])
        P = 1e-12 * np.eye(2)
        V = np.array([[0.3]])
        belief = JointBelief(state=GaussianState(m=m, P=P), noise=InverseWishartState(3.5, V))
        cfg = VbConfig(iterations=3, dyn=CovarianceDynamics(rho=1.0, B=np.eye(1)), scheme=UKF)

        out, diag = vbakf_step(belief, H @ m, np.eye(2), H, np.zeros((2, 2)), cfg)

        np.testing.assert_allclose(out.state.m, m, atol=1e-12)
        np.testing.assert_allclose(out.noise.V, V + H @ out.state.P @ H.T, atol=1e-15)
        np.testing.assert_allclose(diag.innovation, 0.0, atol=1e-15)

    def test_huge_noise_belief(self):
        belief = JointBelief(state=GaussianState(m=[1.0, 2.0], P=np.eye(2)),
                             noise=InverseWishartState(4.0, 1e12 * np.eye(2)))
        out, _ = vbagf_update(belief, [5.0, -5.0], lambda x: x, VbConfig(iterations=1, scheme=UKF))
        np.testing.assert_allclose(out.state.m, [1.0, 2.0], rtol=1e-4)
        np.testing.assert_allclose(out.state.P, np.eye(2), rtol=1e-4, atol=1e-8)

    def test_fixed_point_stability(self):
        def h(x):
            return np.array([np.hypot(x[0] - 3.0, x[1]), np.hypot(x[0], x[1] - 4.0)])

        belief = JointBelief(state=GaussianState(m=[1.0, 1.0], P=0.3 * np.eye(2)),
                             noise=iw_prior(2, sigma0_2=0.5))
        y = np.array([2.5, 3.0])
        cfg = VbConfig(iterations=100, tol=1e-8, scheme=UKF)
        out, diag = vbagf_update(belief, y, h, cfg)
        assert diag.iterations_run < 100
        assert diag.final_delta < cfg.tol

        more, _ = vbagf_update(belief, y, h, VbConfig(iterations=diag.iterations_run + 1,
                                                      tol=0.0, scheme=UKF))
        assert np.linalg.norm(more.noise.V - out.noise.V) <= cfg.tol


class TestLinearEquivalence:
    @pytest.mark.parametrize('scheme', ALL_SCHEMES, ids=lambda s: s.kind)
    def test_random_models(self, scheme):
        rng = np.random.default_rng(2024)
        rho = 1.0 - np.exp(-3.0)
        cfg = VbConfig(iterations=5, tol=0.0, dyn=CovarianceDynamics(rho=rho), scheme=scheme)
        for _ in range(200):
            n, d = rng.integers(1, 5), rng.integers(1, 4)
            A, H = random_stable(rng, n), rng.standard_normal((d, n))
            Q, P, V = 0.1 * random_spd(rng, n), random_spd(rng, n), random_spd(rng, d)
            m, y = rng.standard_normal(n), rng.standard_normal(d)
            nu = d + 1.0 + rng.uniform(0.5, 5.0)
            belief = JointBelief(state=GaussianState(m=m, P=P), noise=InverseWishartState(nu, V))

            hook_f = partial(constant_matrix, A=A)
            hook_h = partial(constant_matrix, A=H)
            pred = vbagf_predict(belief, partial(linear_map, A=A), Q, cfg, jacobian=hook_f)
            out, _ = vbagf_update(pred, y, partial(linear_map, A=H), cfg, jacobian=hook_h)
            lin, _ = vbakf_step(belief, y, A, H, Q, cfg)
            m_ref, P_ref, nu_ref, V_ref = reference_vbakf(m, P, nu, V, y, A, H, Q, rho, 5)

            for got in (out, lin):
                np.testing.assert_allclose(got.state.m, m_ref, rtol=1e-10, atol=1e-10)
                np.testing.assert_allclose(got.state.P, P_ref, rtol=1e-10, atol=1e-10)
                assert got.noise.nu == pytest.approx(nu_ref, abs=1e-12)
                np.testing.assert_allclose(got.noise.V, V_ref, rtol=1e-10, atol=1e-10)


class TestFilterRun:
    def setup_method(self):
        A, Q = wiener_velocity(1.0, 0.1, ndim=1)
        H = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
        self.model = linear_model(A, H, Q)
        self.A, self.H, self.Q = A, H, Q
        rng = np.random.default_rng(0)
        self.data = rng.standard_normal((60, 3))
        self.initial = JointBelief(state=GaussianState(m=np.zeros(2), P=np.eye(2)),
                                   noise=iw_prior(3))

    def test_output_length(self):
        outputs = filter_run(self.model, self.data, self.initial, VbConfig(scheme=UKF))
        assert len(outputs) == len(self.data)

    def test_dof_recursion(self):
        cfg = VbConfig(dyn=CovarianceDynamics(rho=1.0), scheme=UKF)
        outputs = filter_run(self.model, self.data, self.initial, cfg)
        for k, (belief, _) in enumerate(outputs, start=1):
            assert belief.noise.nu == pytest.approx(self.initial.noise.nu + k)

    def test_matches_linear_filter(self):
        cfg = VbConfig(scheme=IntegrationScheme(kind='cubature'))
        outputs = filter_run(self.model, self.data, self.initial, cfg)
        belief = self.initial
        for y, (got, _) in zip(self.data, outputs):
            belief, _ = vbakf_step(belief, y, self.A, self.H, self.Q, cfg)
            np.testing.assert_allclose(got.state.m, belief.state.m, rtol=1e-9, atol=1e-9)
            np.testing.assert_allclose(got.noise.V, belief.noise.V, rtol=1e-9, atol=1e-9)

    @pytest.mark.parametrize('scheme', ALL_SCHEMES, ids=lambda s: s.kind)
    def test_stays_positive_definite(self, scheme):
        outputs = filter_run(self.model, 5.0 * self.data, self.initial, VbConfig(scheme=scheme))
        for belief, diag in outputs:
            assert np.all(np.linalg.eigvalsh(belief.state.P) > 0)
            assert np.all(np.linalg.eigvalsh(diag.predicted_meas_cov) > 0)
            assert np.all(np.linalg.eigvalsh(belief.noise.V) > 0)
            assert diag.iterations_run <= 5

    def test_diagonal_variant(self):
        cfg = VbConfig(diagonal=True, scheme=UKF)
        outputs = filter_run(self.model, self.data, self.initial, cfg)
        for belief, _ in outputs:
            V = np.asarray(belief.noise.V)
            assert np.all(V[~np.eye(3, dtype=bool)] == 0.0)
            assert np.all(np.diag(V) > 0)

    def test_constant_measurement_converges(self):
        model = linear_model(np.eye(1), np.eye(1), 1e-6 * np.eye(1))
        initial = JointBelief(state=GaussianState(m=[0.0], P=[[1.0]]), noise=iw_prior(1))
        outputs = filter_run(model, np.full(50, 2.0), initial, VbConfig(scheme=UKF))
        dist = [abs(b.state.m[0] - 2.0) for b, _ in outputs]
        assert all(b <= a for a, b in zip(dist, dist[1:]))
        assert dist[-1] < 0.1

    def test_empty_data(self):
        with pytest.raises(ValueError):
            filter_run(self.model, np.zeros((0, 3)), self.initial, VbConfig(scheme=UKF))

    def test_failing_step_index(self):
        data = self.data.copy()
        data[3, 0] = np.nan
        with pytest.raises(NumericalFailureError) as info:
            filter_run(self.model, data, self.initial, VbConfig(scheme=UKF))
        assert info.value.step == 3
        assert str(info.value).startswith('[step 3]')

    def test_known_covariance_run(self):
        outputs = gf_run(self.model, self.data, self.initial.state, np.eye(3), UKF)
        assert len(outputs) == len(self.data)
        with pytest.raises(ValueError):
            gf_run(self.model, self.data, self.initial.state, np.stack([np.eye(3)] * 5), UKF)



class TestBearingCut:
    # target at (0, 30) lies due west of the sensor at (30, 30): bearing pi
    m = np.array([0.0, 1.0, 30.0, 0.0, 0.05])
    P = np.diag([1.0, 0.1, 1.0, 0.1, 1e-4])

    def setup_method(self):
        self.model, _ = build_model(default_configs['bearings_only'])

    def test_moments_on_the_cut(self):
        mom = propagate(self.model.h, self.m, self.P, IntegrationScheme(kind='cubature'),
                        mean_fn=self.model.mean_fn, residual_fn=self.model.residual)
        assert abs(angle_residual(mom.mean[2], np.pi)) < 1e-2
        assert mom.cov[2, 2] == pytest.approx(1.0 / 900.0, rel=0.2)

    @pytest.mark.parametrize('scheme', ALL_SCHEMES, ids=lambda s: s.kind)
    def test_noiseless_update(self, scheme):
        y = self.model.h(self.m)
        state = GaussianState(m=self.m, P=self.P)
        out, diag = gf_update(state, y, self.model.h, 1e-4 * np.eye(4), scheme,
                              self.model.h_jacobian, self.model.residual, self.model.mean_fn)
        assert np.max(np.abs(diag.innovation)) < 1e-2
        assert np.max(np.abs(out.m[[0, 2]] - self.m[[0, 2]])) < 0.5

    @pytest.mark.parametrize('scheme', ALL_SCHEMES, ids=lambda s: s.kind)
    def test_noise_increment(self, scheme):
        y = self.model.h(self.m)
        belief = JointBelief(state=GaussianState(m=self.m, P=self.P), noise=iw_prior(4))
        out, diag = vbagf_update(belief, y, self.model.h, VbConfig(iterations=3, scheme=scheme),
                                 self.model.h_jacobian, self.model.residual, self.model.mean_fn)
        assert np.max(np.abs(diag.innovation)) < 1e-2
        assert out.noise.V[2, 2] - belief.noise.V[2, 2] < 0.1

    def test_tracking_along_the_cut(self):
        rng = np.random.default_rng(6)
        x, states, data = self.m.copy(), [], []
        for _ in range(40):
            x = self.model.f(x)
            states.append(x)
            data.append(wrap_angle(self.model.h(x) + 0.01 * rng.standard_normal(4)))
        states, data = np.array(states), np.array(data)
        initial = JointBelief(state=GaussianState(m=self.m, P=self.P),
                              noise=iw_prior(4, sigma0_2=1e-4))

        known = gf_run(self.model, data, initial.state, 1e-4 * np.eye(4),
                       IntegrationScheme(kind='cubature'))
        adaptive = filter_run(self.model, data, initial,
                              VbConfig(scheme=IntegrationScheme(kind='cubature')))
        for means in ([s.m for s, _ in known], [b.state.m for b, _ in adaptive]):
            err = np.hypot(*(np.array(means) - states)[:, [0, 2]].T)
            assert np.all(err < 1.0)
