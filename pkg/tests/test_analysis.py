import numpy as np
import pytest

from conftest import band_limited_state, symmetric_state
from symlab.analysis import (
    axis_slope_speed, estimate_axis, estimate_speed, instantaneous_speed,
    phase_regression_speed, reflect, spatial_deviation, steady_subequation_residual,
    symmetry_defect, track_axis, trajectory_range, verify,
)
from symlab.classifier import classify
from symlab.equations import get_equation, spec_from_dict
from symlab.errors import AnalysisError, MismatchError, RegressionError, UnwrapAmbiguityError
from symlab.models import Grid, SpeedMethod, Trajectory, Verdict
from symlab.solver import (
    kdv_burgers_steady_profile, shift, transform_forward, transform_inverse,
)

TIMES = np.linspace(0.0, 1.0, 11)


def axis_error(lam, axis, L):
    """Distance between two axes on the L/2 circle."""
    half = L / 2.0
    return abs(np.mod(lam - axis + half / 2.0, half) - half / 2.0)


def translating(name, state, c, times=TIMES):
    return Trajectory(name, [shift(state, c * t).replace(time=t) for t in times])


class TestReflection(object):

    def test_involution(self, small_grid, rng):
        state = band_limited_state(small_grid, rng, dimension=2)
        twice = reflect(reflect(state, 0.83), 0.83)
        np.testing.assert_allclose(twice.coeffs, state.coeffs, rtol=0, atol=1e-13)

    def test_reflection_is_pointwise(self, small_grid, rng):
        state = band_limited_state(small_grid, rng)
        grid = small_grid
        lam = 5 * grid.spacing
        mirrored = reflect(state, lam)
        # u(2 lam - x_n) = u(x_{10 - n})
        values = transform_inverse(state)[0]
        np.testing.assert_allclose(transform_inverse(mirrored)[0],
                                   values[(10 - np.arange(grid.N)) % grid.N], atol=1e-13)

    def test_conjugacy_with_translation(self, small_grid, rng):
        state = band_limited_state(small_grid, rng)
        lam, a = 0.4, 1.3
        np.testing.assert_allclose(
            shift(reflect(state, lam), a).coeffs,
            reflect(shift(state, a), lam + a).coeffs, rtol=0, atol=1e-13)

    def test_defect_is_translation_equivariant(self, small_grid, rng):
        state = band_limited_state(small_grid, rng)
        assert symmetry_defect(shift(state, 0.9), 1.4) == pytest.approx(
            symmetry_defect(state, 0.5), abs=1e-13)

    def test_defect_of_zero_state(self, small_grid):
        state = transform_forward(np.zeros(small_grid.N), small_grid)
        assert symmetry_defect(state, 1.0) == 0.0

    def test_defect_vanishes_at_the_axis(self, small_grid, rng):
        state = symmetric_state(small_grid, rng, 1.1)
        assert symmetry_defect(state, 1.1) < 1e-14
        assert symmetry_defect(state, 1.1 + small_grid.L / 2) < 1e-13
        assert symmetry_defect(state, 1.6) > 1e-3


class TestAxis(object):

    @pytest.mark.parametrize('axis', [0.0, 0.37, 1.0, 2.5, 3.1, 4.0, 6.0])
    def test_recovers_the_axis(self, small_grid, rng, axis):
        state = symmetric_state(small_grid, rng, axis)
        estimate = estimate_axis(state)
        assert estimate.valid
        assert 0.0 <= estimate.lam < small_grid.L / 2
        assert axis_error(estimate.lam, axis, small_grid.L) < 1e-9 * small_grid.L
        assert estimate.defect < 1e-7

    def test_recovers_random_axes(self, small_grid, rng):
        L = small_grid.L
        for _ in range(100):
            axis = rng.uniform(0.0, L)
            state = symmetric_state(small_grid, rng, axis, band=int(rng.integers(3, 9)))
            estimate = estimate_axis(state)
            assert axis_error(estimate.lam, axis, L) < 1e-9 * L, axis

    def test_vector_states_share_one_axis(self, small_grid, rng):
        state = symmetric_state(small_grid, rng, 2.2, dimension=2)
        estimate = estimate_axis(state)
        assert axis_error(estimate.lam, 2.2, small_grid.L) < 1e-9 * small_grid.L

    def test_flat_state_has_no_axis(self, small_grid):
        assert not estimate_axis(transform_forward(np.full(small_grid.N, 0.3), small_grid)).valid
        assert not estimate_axis(transform_forward(np.zeros(small_grid.N), small_grid)).valid

    def test_track_follows_translation(self, small_grid, rng):
        trajectory = translating('synthetic', symmetric_state(small_grid, rng, 0.5), 0.7)
        track = track_axis(trajectory)
        lam = np.array([sample.lam for sample in track])
        assert all(sample.valid for sample in track)
        np.testing.assert_allclose(np.diff(lam), 0.07, atol=1e-8)

    def test_track_needs_two_snapshots(self, small_grid, rng):
        with pytest.raises(AnalysisError):
            track_axis(Trajectory('synthetic', [symmetric_state(small_grid, rng, 0.5)]))

    def test_quarter_period_jump_is_ambiguous(self, small_grid, rng):
        state = symmetric_state(small_grid, rng, 0.5)
        trajectory = translating('synthetic', state, small_grid.L / 4, times=[0.0, 1.0])
        with pytest.raises(UnwrapAmbiguityError):
            track_axis(trajectory)


class TestSpeed(object):

    def test_both_methods_agree_on_translation(self, small_grid, rng):
        trajectory = translating('synthetic', symmetric_state(small_grid, rng, 0.5), 0.7)
        slope, phase = estimate_speed(trajectory)
        assert slope.method is SpeedMethod.AXIS_SLOPE
        assert phase.method is SpeedMethod.PHASE_REGRESSION
        assert slope.c == pytest.approx(0.7, abs=1e-8)
        assert phase.c == pytest.approx(0.7, abs=1e-10)
        assert phase.residual < 1e-10

    def test_phase_regression_needs_modes(self, small_grid):
        state = transform_forward(np.cos(small_grid.x), small_grid)
        with pytest.raises(RegressionError):
            phase_regression_speed(translating('synthetic', state, 0.7))

    def test_three_snapshots_required(self, small_grid, rng):
        trajectory = translating('synthetic', symmetric_state(small_grid, rng, 0.5), 0.7,
                                 times=[0.0, 1.0])
        with pytest.raises(RegressionError):
            estimate_speed(trajectory)

    def test_axis_slope_of_standing_state(self, small_grid, rng):
        trajectory = translating('synthetic', symmetric_state(small_grid, rng, 0.5), 0.0)
        estimate = axis_slope_speed(trajectory)
        assert abs(estimate.c) < 1e-8
        assert estimate.residual < 1e-7


class TestSteadySubequation(object):

    def test_kdv_burgers_profile(self):
        grid = Grid(256, 40.0)
        spec = get_equation('kdv_burgers')
        state = transform_forward(kdv_burgers_steady_profile(grid, speed=2.0), grid)
        assert steady_subequation_residual(spec, state, 2.0) < 1e-6
        assert instantaneous_speed(spec, state) == pytest.approx(2.0, abs=1e-6)
        assert steady_subequation_residual(spec, state, 1.0) > 1e-2

    def test_zero_state(self):
        grid = Grid(64, 10.0)
        state = transform_forward(np.zeros(grid.N), grid)
        spec = get_equation('kdv_burgers')
        assert instantaneous_speed(spec, state) == 0.0
        assert steady_subequation_residual(spec, state, 1.0) == 0.0


class TestVerify(object):

    def test_traveling_wave_is_consistent(self, small_grid, rng):
        spec = get_equation('kdv')
        trajectory = translating('kdv', symmetric_state(small_grid, rng, 0.5), 0.7)
        report = verify(spec, classify(spec), trajectory)
        assert report.verdict is Verdict.CONSISTENT_SYMMETRIC
        assert report.exit_code == 0

    def test_symmetric_but_not_traveling_is_a_violation(self, small_grid, rng):
        spec = get_equation('kdv')
        state = symmetric_state(small_grid, rng, 0.5)
        trajectory = Trajectory('kdv', [
            state.replace(coeffs=(1.0 + t) * state.coeffs, time=t) for t in TIMES])
        report = verify(spec, classify(spec), trajectory)
        assert report.verdict is Verdict.THEOREM_VIOLATION
        assert report.exit_code == 2

    def test_moving_axis_contradicts_fixed_axis(self, small_grid, rng):
        spec = get_equation('heat')
        trajectory = translating('heat', symmetric_state(small_grid, rng, 0.5), 0.7)
        report = verify(spec, classify(spec), trajectory)
        assert report.verdict is Verdict.THEOREM_VIOLATION

    def test_standing_symmetric_state_fits_fixed_axis(self, small_grid, rng):
        spec = get_equation('heat')
        trajectory = translating('heat', symmetric_state(small_grid, rng, 0.5), 0.0)
        assert verify(spec, classify(spec), trajectory).verdict is Verdict.CONSISTENT_SYMMETRIC

    def test_asymmetric_run_makes_no_claim(self, small_grid, rng):
        spec = get_equation('heat')
        trajectory = translating('heat', band_limited_state(small_grid, rng), 0.0)
        report = verify(spec, classify(spec), trajectory)
        assert report.verdict is Verdict.CONSISTENT_SYMMETRY_LOST
        assert report.exit_code == 0

    def test_constant_run_for_local_flux(self, small_grid):
        spec = get_equation('burgers')
        state = transform_forward(np.full(small_grid.N, 0.3), small_grid)
        report = verify(spec, classify(spec), translating('burgers', state, 0.0))
        assert report.verdict is Verdict.CONSISTENT_SYMMETRIC
        assert any('invertible on the visited range' in line for line in report.diagnostics)

    def test_unclassified_is_inconclusive(self, small_grid, rng):
        spec = spec_from_dict({'name': 'odd_one', 'terms': [{'outer': 'xi+xi^2', 'factors': [{}]}]})
        trajectory = translating('odd_one', symmetric_state(small_grid, rng, 0.5), 0.0)
        report = verify(spec, classify(spec), trajectory)
        assert report.verdict is Verdict.INCONCLUSIVE
        assert report.exit_code == 3

    def test_mismatched_trajectory(self, small_grid, rng):
        spec = get_equation('heat')
        trajectory = translating('burgers', symmetric_state(small_grid, rng, 0.5), 0.0)
        with pytest.raises(MismatchError):
            verify(spec, classify(spec), trajectory)

    def test_report_document(self, small_grid, rng):
        spec = get_equation('heat')
        trajectory = translating('heat', symmetric_state(small_grid, rng, 0.5), 0.0)
        document = verify(spec, classify(spec), trajectory).to_dict()
        assert document['verdict'] == 'ConsistentSymmetricPrediction'
        assert len(document['axis']) == len(TIMES)
        assert document['classification']['label'] == 'P2'


class TestTrajectoryHelpers(object):

    def test_range_and_deviation(self, small_grid):
        state = transform_forward(0.5 + np.cos(small_grid.x), small_grid)
        lo, hi = trajectory_range(translating('synthetic', state, 0.0, times=[0.0]))
        assert lo == pytest.approx(-0.5) and hi == pytest.approx(1.5)
        assert spatial_deviation(state) > 0.5
        flat = transform_forward(np.full(small_grid.N, 2.0), small_grid)
        assert spatial_deviation(flat) < 1e-14
