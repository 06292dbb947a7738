"""
Axis of symmetry: estimation on one state and tracking along a trajectory.

Reflections about lam and lam + L/2 coincide on the torus, so axes live in
[0, L/2). Tracking unwraps them by multiples of L/2 into a continuous curve,
which is only well defined while the axis moves less than L/4 between
snapshots.
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

from symlab.analysis.reflection import defect_scan, symmetry_defect
from symlab.errors import AnalysisError, UnwrapAmbiguityError
from symlab.models.report import AxisEstimate

logger = logging.getLogger(__name__)

FLAT_TOLERANCE = 1e-12
SCAN_FACTOR = 4
REFINE_TOLERANCE = 1e-10
AMBIGUITY_BAND = 1e-3


class AxisSample(NamedTuple):
    time: float
    lam: float
    defect: float
    valid: bool


def estimate_axis(state):
    """
    Axis minimising the symmetry defect.

    Scans 4N equispaced candidates in [0, L/2) and refines the best one with
    a bounded Brent search on the squared defect within one scan cell on
    either side, to 1e-10 L. States with norm below 1e-12, or with less than
    1e-12 of their energy outside mode 0, have no axis (valid=False).
    """
    grid = state.grid
    half = grid.L / 2.0
    energy = np.abs(state.coeffs) ** 2
    total = float(np.sum(energy))
    if np.sqrt(total) < FLAT_TOLERANCE or float(np.sum(energy[:, 1:])) < FLAT_TOLERANCE * total:
        return AxisEstimate(0.0, 0.0, False)

    cell = half / (SCAN_FACTOR * grid.N)
    candidates = np.arange(SCAN_FACTOR * grid.N) * cell
    best = candidates[int(np.argmin(defect_scan(state, candidates)))]

    # Search the offset from the best candidate so the tolerance stays absolute.
    result = minimize_scalar(
        lambda offset: float(defect_scan(state, [best + offset])[0]),
        bounds=(-cell, cell),
        method='bounded',
        options={'xatol': REFINE_TOLERANCE * grid.L},
    )
    lam = float(np.mod(best + result.x, half))
    if np.isclose(lam, half, rtol=0.0, atol=REFINE_TOLERANCE * grid.L):
        lam = 0.0
    return AxisEstimate(lam, symmetry_defect(state, lam), True)


def track_axis(trajectory):
    """
    Estimate the axis of every snapshot and unwrap it in time.

    Flat snapshots carry the previous axis forward.

    Raises:
        AnalysisError: fewer than two snapshots.
        UnwrapAmbiguityError: consecutive axes differ by about L/4.
    """
    if len(trajectory) < 2:
        raise AnalysisError('tracking an axis needs at least two snapshots')

    half = trajectory.grid.L / 2.0
    samples = []
    previous = None
    for state in trajectory:
        estimate = estimate_axis(state)
        if not estimate.valid:
            lam = previous if previous is not None else 0.0
            samples.append(AxisSample(state.time, lam, estimate.defect, False))
            continue
        lam = estimate.lam
        if previous is not None:
            step = np.mod(lam - previous + half / 2.0, half) - half / 2.0
            if abs(abs(step) - half / 2.0) < AMBIGUITY_BAND * half:
                raise UnwrapAmbiguityError(
                    f'axis jumped by about L/4 between snapshots before t={state.time:.6g}; '
                    f'record snapshots more often')
            lam = previous + step
        samples.append(AxisSample(state.time, float(lam), estimate.defect, True))
        previous = lam

    logger.debug('tracked axis over %d snapshots', len(samples))
    return samples
