"""
Verification of a trajectory against the behavior its classification predicts.

Every principle is an implication "symmetric on a time interval => ...".
A run that loses symmetry therefore never contradicts it; only a run that
stays symmetric (max defect below sym_tol) and misses the prediction by more
than pred_tol is a violation.
"""

import logging

import numpy as np

from symlab.analysis.axis import track_axis
from symlab.analysis.speed import estimate_speed
from symlab.analysis.steady import instantaneous_speed, steady_subequation_residual
from symlab.classifier.flux import check_flux_invertibility
from symlab.errors import MismatchError, RegressionError
from symlab.models.report import (
    Prediction, Principle, SpeedMethod, Tolerances, Verdict, VerificationReport,
)
from symlab.solver.transforms import transform_inverse

logger = logging.getLogger(__name__)


def trajectory_range(trajectory):
    """(min, max) of the physical values over every snapshot and component."""
    lo, hi = np.inf, -np.inf
    for state in trajectory:
        values = transform_inverse(state)
        lo, hi = min(lo, float(values.min())), max(hi, float(values.max()))
    return lo, hi


def audit_flux_range(flux, trajectory):
    """check_flux_invertibility over the range the trajectory actually visited."""
    lo, hi = trajectory_range(trajectory)
    return check_flux_invertibility(flux, lo, hi)


def spatial_deviation(state):
    """Energy outside mode 0 relative to the total (0 for the zero state)."""
    norm = state.norm()
    if norm == 0:
        return 0.0
    return float(np.linalg.norm(state.coeffs[:, 1:]) / norm)


def _check_mismatch(spec, classification, trajectory):
    if classification.equation != spec.name:
        raise MismatchError(
            f'classification is for {classification.equation}, equation is {spec.name}')
    if trajectory.equation != spec.name:
        raise MismatchError(f'trajectory was produced by {trajectory.equation}, not {spec.name}')
    if trajectory.dimension != spec.dimension:
        raise MismatchError(
            f'trajectory has {trajectory.dimension} components, {spec.name} has {spec.dimension}')


def verify(spec, classification, trajectory, tol=None):
    """
    Compare trajectory with the prediction of classification.

    Raises:
        MismatchError: spec, classification and trajectory disagree.
    """
    tol = tol or Tolerances()
    _check_mismatch(spec, classification, trajectory)

    track = track_axis(trajectory)
    diagnostics = []
    try:
        speeds = estimate_speed(trajectory, track)
    except RegressionError as exc:
        speeds = []
        diagnostics.append(f'speed estimation skipped: {exc}')

    report = VerificationReport(
        classification=classification,
        times=[s.time for s in track],
        axis=[s.lam for s in track],
        defects=[s.defect for s in track],
        speeds=speeds,
        verdict=Verdict.INCONCLUSIVE,
        diagnostics=diagnostics,
        tolerances=tol,
    )
    label = classification.label
    max_defect = report.max_defect
    diagnostics.append(f'max symmetry defect {max_defect:.3e} (sym_tol {tol.sym_tol:g})')

    if label is Principle.UNCLASSIFIED:
        diagnostics.append('equation is unclassified; nothing to verify')
    elif max_defect >= tol.sym_tol:
        report.verdict = Verdict.CONSISTENT_SYMMETRY_LOST
        diagnostics.append('symmetry was lost, so the principle makes no claim about this run')
    elif label is Principle.P1:
        report.verdict = _verify_traveling(report, tol)
    elif label is Principle.P2:
        report.verdict = _verify_fixed_axis(report, trajectory, tol)
    elif label is Principle.P3_STRONG:
        report.verdict = _verify_constant(report, trajectory, tol)
    else:
        report.verdict = _verify_steady(report, spec, trajectory, track, tol)

    if label.is_p3 and classification.flux is not None and classification.flux.present:
        audit = audit_flux_range(classification.flux, trajectory)
        if audit.invertible:
            diagnostics.append(f'F1\' invertible on the visited range [{audit.lo:.6g}, {audit.hi:.6g}]')
        else:
            diagnostics.append(
                f'F1\' not invertible on the visited range [{audit.lo:.6g}, {audit.hi:.6g}] '
                f'(F1\'\' vanishes near {audit.witness:.6g})')
            if label is Principle.P3_STRONG and report.verdict is Verdict.THEOREM_VIOLATION:
                report.verdict = Verdict.INCONCLUSIVE
                diagnostics.append('flux hypothesis fails on the visited range; no violation claimed')

    logger.info('%s: %s', spec.name, report.verdict.value)
    return report


def _verify_traveling(report, tol):
    estimate = report.speed(SpeedMethod.PHASE_REGRESSION)
    if estimate is None:
        report.diagnostics.append('no speed estimate; cannot test the traveling prediction')
        return Verdict.INCONCLUSIVE
    report.diagnostics.append(
        f'traveling residual {estimate.residual:.3e} at c={estimate.c:.6g} (pred_tol {tol.pred_tol:g})')
    if estimate.residual < tol.pred_tol:
        return Verdict.CONSISTENT_SYMMETRIC
    return Verdict.THEOREM_VIOLATION


def _verify_fixed_axis(report, trajectory, tol):
    drift = float(np.max(np.abs(np.asarray(report.axis) - report.axis[0])))
    limit = tol.pred_tol * trajectory.grid.L
    report.diagnostics.append(f'axis drift {drift:.3e} (limit {limit:.3e})')
    return Verdict.CONSISTENT_SYMMETRIC if drift < limit else Verdict.THEOREM_VIOLATION


def _verify_constant(report, trajectory, tol):
    deviation = max(spatial_deviation(state) for state in trajectory)
    report.diagnostics.append(f'max spatial deviation {deviation:.3e}')
    holds = deviation < tol.pred_tol
    if report.classification.predicted is Prediction.CONSTANT_IN_SPACE_TIME:
        first = trajectory[0]
        scale = first.norm() or 1.0
        change = max(float(np.linalg.norm(s.coeffs - first.coeffs)) for s in trajectory) / scale
        report.diagnostics.append(f'max relative change in time {change:.3e}')
        holds = holds and change < tol.pred_tol
    return Verdict.CONSISTENT_SYMMETRIC if holds else Verdict.THEOREM_VIOLATION


def _verify_steady(report, spec, trajectory, track, tol):
    times = np.array([s.time for s in track])
    axis = np.array([s.lam for s in track])
    velocity = np.gradient(axis, times)
    residuals = [
        steady_subequation_residual(spec, state, float(c))
        for state, c in zip(trajectory, velocity)
    ]
    report.steady_residuals = residuals
    fitted = instantaneous_speed(spec, trajectory[0])
    report.diagnostics.append(
        f'max steady sub-equation residual {max(residuals):.3e}; '
        f'least-squares speed at t0 {fitted:.6g}')
    if max(residuals) < tol.pred_tol:
        return Verdict.CONSISTENT_SYMMETRIC
    return Verdict.THEOREM_VIOLATION
