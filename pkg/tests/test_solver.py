import numpy as np
import pytest

from conftest import band_limited_state
from symlab.equations import get_equation, spec_from_dict
from symlab.errors import BlowUpError, ClassifyOnlyError, GridError
from symlab.models import Grid, IntegratorConfig, Scheme, SpectralState
from symlab.solver import (
    dealias_mask, derivative, eval_rhs, hermitian_project, integrate, shift,
    transform_forward, transform_inverse,
)

SQUARE = spec_from_dict({'name': 'square', 'terms': [{'factors': [{}, {}]}]})
REACTION_DIFFUSION = spec_from_dict({
    'name': 'reaction_diffusion',
    'terms': [
        {'outer': '(i*xi)^2', 'factors': [{}]},
        {'factors': [{}, {}]},
    ],
})


class TestGrid(object):

    @pytest.mark.parametrize('N, L', [(100, 1.0), (8, 1.0), (32, 0.0), (32, -1.0),
                                      (32, float('inf')), (32.0, 1.0), (True, 1.0)])
    def test_rejected_grids(self, N, L):
        with pytest.raises(GridError):
            Grid(N, L)

    def test_wavenumbers_in_fft_order(self):
        grid = Grid(16, 2.0 * np.pi)
        assert grid.modes[:3].tolist() == [0, 1, 2]
        assert grid.modes[grid.nyquist] == -8
        np.testing.assert_allclose(grid.wavenumbers, grid.modes, rtol=1e-15)

    def test_state_shape_must_match(self, small_grid):
        with pytest.raises(GridError):
            SpectralState(small_grid, 0.0, np.zeros(16))


class TestTransforms(object):

    def test_round_trip(self, small_grid, rng):
        values = rng.normal(size=(2, small_grid.N))
        state = transform_forward(values, small_grid)
        np.testing.assert_allclose(transform_inverse(state), values, rtol=0, atol=1e-13)
        assert state.hermitian_residual() < 1e-14

    def test_complex_values_are_rejected(self, small_grid):
        with pytest.raises(GridError):
            transform_forward(np.full(small_grid.N, 1j), small_grid)

    def test_shift_by_period_is_exact(self, small_grid, rng):
        state = band_limited_state(small_grid, rng)
        np.testing.assert_array_equal(shift(state, small_grid.L).coeffs, state.coeffs)

    def test_shift_by_grid_points(self, small_grid, rng):
        state = band_limited_state(small_grid, rng)
        moved = shift(state, 3 * small_grid.spacing)
        np.testing.assert_allclose(
            transform_inverse(moved), np.roll(transform_inverse(state), 3, axis=-1),
            rtol=0, atol=1e-12)

    def test_derivative_of_sine(self, small_grid):
        state = transform_forward(np.sin(small_grid.x), small_grid)
        values = transform_inverse(state.replace(coeffs=derivative(state)))
        np.testing.assert_allclose(values[0], np.cos(small_grid.x), rtol=0, atol=1e-13)

    def test_dealias_mask_keeps_two_thirds(self, small_grid):
        assert dealias_mask(small_grid, 2.0 / 3.0).sum() == 21
        assert dealias_mask(small_grid, 1.0).all()

    def test_hermitian_projection(self, small_grid, rng):
        coeffs = rng.normal(size=small_grid.N) + 1j * rng.normal(size=small_grid.N)
        projected = hermitian_project(coeffs, small_grid)
        assert projected[small_grid.nyquist] == 0
        assert SpectralState(small_grid, 0.0, projected).hermitian_residual() < 1e-15


class TestRightHandSide(object):

    def test_square_matches_direct_convolution(self, small_grid, rng):
        state = band_limited_state(small_grid, rng, band=12)
        c = state.coeffs[0]
        N = small_grid.N
        expected = np.zeros(N, dtype=np.complex128)
        for p in range(N):
            for q in range(N):
                expected[(p + q) % N] += c[p] * c[q]
        expected /= np.sqrt(N)
        np.testing.assert_allclose(eval_rhs(SQUARE, state, 1.0)[0], expected,
                                   rtol=0, atol=1e-12)

    def test_linear_term_is_diagonal(self, small_grid, rng):
        state = band_limited_state(small_grid, rng)
        np.testing.assert_allclose(
            eval_rhs(get_equation('heat'), state)[0],
            -small_grid.wavenumbers ** 2 * state.coeffs[0], rtol=1e-14, atol=1e-14)


class TestIntegratorConfig(object):

    def test_steps_land_on_t_end(self):
        cfg = IntegratorConfig(dt=0.3, t_end=1.0)
        assert cfg.steps == 4
        assert cfg.effective_dt == 0.25

    def test_zero_duration(self):
        cfg = IntegratorConfig(dt=0.1, t_end=0.0)
        assert cfg.steps == 0

    @pytest.mark.parametrize('kwargs', [
        {'dt': 0.5, 't_end': 0.1},
        {'dt': 0.0, 't_end': 1.0},
        {'dt': 0.1, 't_end': -1.0},
        {'dt': 0.1, 't_end': 1.0, 'snapshot_stride': 0},
        {'dt': 0.1, 't_end': 1.0, 'dealias_fraction': 1.5},
    ])
    def test_rejected_settings(self, kwargs):
        with pytest.raises(ValueError):
            IntegratorConfig(**kwargs)

    def test_scheme_from_string(self):
        assert IntegratorConfig(dt=0.1, t_end=1.0, scheme='IFRK4').scheme is Scheme.IFRK4


class TestIntegrate(object):

    @pytest.mark.parametrize('scheme', list(Scheme))
    def test_heat_flow_is_exact(self, small_grid, scheme):
        values = np.cos(small_grid.x) + 0.5 * np.sin(3 * small_grid.x)
        ic = transform_forward(values, small_grid)
        cfg = IntegratorConfig(dt=0.01, t_end=1.0, scheme=scheme)
        final = integrate(get_equation('heat'), ic, cfg)[-1]
        exact = np.exp(-1.0) * np.cos(small_grid.x) + 0.5 * np.exp(-9.0) * np.sin(3 * small_grid.x)
        assert final.time == 1.0
        np.testing.assert_allclose(transform_inverse(final)[0], exact, rtol=0, atol=1e-12)

    def test_zero_duration_returns_initial_state(self, small_grid, rng):
        ic = band_limited_state(small_grid, rng)
        trajectory = integrate(get_equation('heat'), ic, IntegratorConfig(dt=0.1, t_end=0.0))
        assert len(trajectory) == 1
        assert trajectory[0] is ic

    def test_snapshot_stride(self, small_grid, rng):
        ic = band_limited_state(small_grid, rng)
        cfg = IntegratorConfig(dt=0.01, t_end=1.0, snapshot_stride=30)
        trajectory = integrate(get_equation('heat'), ic, cfg)
        assert len(trajectory) == 5
        np.testing.assert_allclose(trajectory.times, [0.0, 0.3, 0.6, 0.9, 1.0])

    def test_classify_only_is_refused(self, small_grid, rng):
        ic = band_limited_state(small_grid, rng)
        with pytest.raises(ClassifyOnlyError):
            integrate(get_equation('ostrovsky'), ic, IntegratorConfig(dt=0.1, t_end=1.0))

    def test_component_count_must_match(self, small_grid, rng):
        ic = band_limited_state(small_grid, rng)
        with pytest.raises(GridError):
            integrate(get_equation('hirota_satsuma'), ic, IntegratorConfig(dt=0.1, t_end=1.0))

    def test_blow_up_keeps_partial_trajectory(self, small_grid):
        ic = transform_forward(np.ones(small_grid.N), small_grid)
        with pytest.raises(BlowUpError) as info:
            integrate(SQUARE, ic, IntegratorConfig(dt=0.01, t_end=2.0))
        assert 0.9 < info.value.time <= 2.0
        assert len(info.value.trajectory) >= 1

    def test_fourth_order_convergence(self, small_grid):
        values = 0.5 + 0.1 * np.cos(small_grid.x)
        ic = transform_forward(values, small_grid)

        def final(dt):
            cfg = IntegratorConfig(dt=dt, t_end=0.5)
            return integrate(REACTION_DIFFUSION, ic, cfg)[-1].coeffs

        reference = final(0.1 / 16)
        coarse = np.linalg.norm(final(0.1) - reference)
        fine = np.linalg.norm(final(0.05) - reference)
        assert coarse / fine >= 12.0

    @pytest.mark.parametrize('scheme', list(Scheme))
    def test_repeated_runs_are_bit_identical(self, small_grid, rng, scheme):
        ic = band_limited_state(small_grid, rng, band=4)
        ic = ic.replace(coeffs=0.1 * ic.coeffs)
        cfg = IntegratorConfig(dt=0.01, t_end=0.5, snapshot_stride=10, scheme=scheme)
        first = integrate(get_equation('kdv'), ic, cfg)
        second = integrate(get_equation('kdv'), ic, cfg)
        assert np.array_equal(first.times, second.times)
        for a, b in zip(first, second):
            assert np.array_equal(a.coeffs, b.coeffs)

    def test_kdv_conserves_the_mean(self, small_grid, rng):
        ic = band_limited_state(small_grid, rng, band=4)
        ic = ic.replace(coeffs=0.1 * ic.coeffs)
        cfg = IntegratorConfig(dt=0.001, t_end=1.0, snapshot_stride=100)
        trajectory = integrate(get_equation('kdv'), ic, cfg)
        means = np.array([transform_inverse(state).mean() for state in trajectory])
        np.testing.assert_allclose(means, means[0], rtol=0.0, atol=1e-10)

    def test_real_fields_stay_real(self, small_grid, rng):
        ic = band_limited_state(small_grid, rng, band=4)
        ic = ic.replace(coeffs=0.1 * ic.coeffs)
        cfg = IntegratorConfig(dt=0.01, t_end=0.5, snapshot_stride=10)
        for state in integrate(get_equation('burgers'), ic, cfg):
            assert state.hermitian_residual() < 1e-13
