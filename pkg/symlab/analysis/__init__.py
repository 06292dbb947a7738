"""
Symmetry analysis package.

Reflection, symmetry defect, axis estimation and tracking, speed estimation
and verification of the predicted behavior.
"""

from symlab.analysis.axis import AxisSample, estimate_axis, track_axis
from symlab.analysis.reflection import reflect, symmetry_defect
from symlab.analysis.speed import (
    axis_slope_speed, estimate_speed, phase_regression_speed, traveling_residual,
)
from symlab.analysis.steady import instantaneous_speed, steady_subequation_residual
from symlab.analysis.verification import (
    audit_flux_range, spatial_deviation, trajectory_range, verify,
)

__all__ = [
    'AxisSample', 'estimate_axis', 'track_axis', 'reflect', 'symmetry_defect',
    'axis_slope_speed', 'estimate_speed', 'phase_regression_speed',
    'traveling_residual', 'instantaneous_speed', 'steady_subequation_residual',
    'audit_flux_range', 'spatial_deviation', 'trajectory_range', 'verify',
]
