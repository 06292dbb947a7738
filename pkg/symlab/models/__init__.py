"""
Domain models package.

Exports the immutable data types shared by every feature package.
"""

from symlab.models.symbol import Parity, SymbolExpr
from symlab.models.equation import (
    EquationSpec, Factor, LocalFluxView, PseudoProductTerm, ZeroModePolicy,
)
from symlab.models.spectral import Grid, IntegratorConfig, Scheme, SpectralState, Trajectory
from symlab.models.report import (
    AxisEstimate, ClassificationReport, ComponentParity, Prediction, Principle,
    SpeedEstimate, SpeedMethod, Tolerances, ValidationReport, Verdict,
    VerificationReport,
)

__all__ = [
    'Parity', 'SymbolExpr',
    'EquationSpec', 'Factor', 'LocalFluxView', 'PseudoProductTerm', 'ZeroModePolicy',
    'Grid', 'IntegratorConfig', 'Scheme', 'SpectralState', 'Trajectory',
    'AxisEstimate', 'ClassificationReport', 'ComponentParity', 'Prediction',
    'Principle', 'SpeedEstimate', 'SpeedMethod', 'Tolerances', 'ValidationReport',
    'Verdict', 'VerificationReport',
]
