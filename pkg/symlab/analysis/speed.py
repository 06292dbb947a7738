"""Traveling speed of a trajectory from its axis track and from Fourier phases."""

import logging

import numpy as np

from symlab.analysis.axis import track_axis
from symlab.errors import RegressionError
from symlab.models.report import SpeedEstimate, SpeedMethod
from symlab.solver.transforms import shift

logger = logging.getLogger(__name__)

AMPLITUDE_CUTOFF = 1e-6
MIN_MODES = 3
MIN_SNAPSHOTS = 3


def traveling_residual(trajectory, c):
    """max_t ||u(t) - shift(u(t0), c (t - t0))|| / ||u(t0)||."""
    first = trajectory[0]
    norm = first.norm()
    worst = 0.0
    for state in trajectory:
        moved = shift(first, c * (state.time - first.time))
        error = float(np.linalg.norm(state.coeffs - moved.coeffs))
        worst = max(worst, error / norm if norm > 0 else error)
    return worst


def axis_slope_speed(trajectory, track=None):
    """Least-squares slope of the unwrapped axis."""
    track = track if track is not None else track_axis(trajectory)
    times = np.array([sample.time for sample in track])
    axis = np.array([sample.lam for sample in track])
    slope = float(np.polyfit(times - times[0], axis, 1)[0])
    return SpeedEstimate(slope, traveling_residual(trajectory, slope), SpeedMethod.AXIS_SLOPE)


def phase_regression_speed(trajectory):
    """
    Speed from the drift of Fourier phases.

    For modes k > 0 whose initial amplitude exceeds 1e-6 of the largest, the
    phase of u_k(t)/u_k(t0), unwrapped along time, is fitted to
    -xi_k c (t - t0) by least squares weighted with |u_k(t0)|^2.
    """
    first = trajectory[0]
    grid = first.grid
    positive = (grid.modes > 0)
    amplitude = np.abs(first.coeffs)
    usable = positive[np.newaxis, :] & (amplitude > AMPLITUDE_CUTOFF * amplitude.max(initial=0.0))
    if np.count_nonzero(usable) < MIN_MODES:
        raise RegressionError(
            f'phase regression needs {MIN_MODES} usable modes, found {np.count_nonzero(usable)}')

    rows, cols = np.nonzero(usable)
    reference = first.coeffs[rows, cols]
    xi = grid.wavenumbers[cols]
    weights = np.abs(reference) ** 2
    elapsed = trajectory.times - first.time

    ratios = np.array([state.coeffs[rows, cols] / reference for state in trajectory])
    phases = np.unwrap(np.angle(ratios), axis=0)

    design = -xi[np.newaxis, :] * elapsed[:, np.newaxis]
    numerator = np.sum(weights * design * phases)
    denominator = np.sum(weights * design ** 2)
    if denominator == 0:
        raise RegressionError('snapshots do not span any time')
    c = float(numerator / denominator)
    return SpeedEstimate(c, traveling_residual(trajectory, c), SpeedMethod.PHASE_REGRESSION)


def estimate_speed(trajectory, track=None):
    """
    Both speed estimates, axis slope first.

    Raises:
        RegressionError: fewer than three snapshots or usable modes.
    """
    if len(trajectory) < MIN_SNAPSHOTS:
        raise RegressionError(f'speed estimation needs {MIN_SNAPSHOTS} snapshots, got {len(trajectory)}')
    estimates = [axis_slope_speed(trajectory, track), phase_regression_speed(trajectory)]
    logger.debug('speed estimates: %s', ', '.join(f'{e.method.value}={e.c:.6g}' for e in estimates))
    return estimates
