"""Report models: validation, classification and verification results."""

from dataclasses import dataclass, field
from enum import Enum


class Principle(Enum):
    """Symmetry principle an equation falls under."""
    P1 = 'P1'
    P2 = 'P2'
    P3_STRONG = 'P3_strong'
    P3_WEAK = 'P3_weak'
    UNCLASSIFIED = 'Unclassified'

    @property
    def is_p3(self):
        return self in (Principle.P3_STRONG, Principle.P3_WEAK)


class Prediction(Enum):
    """Behavior the principle predicts for persistently symmetric solutions."""
    TRAVELING_WAVE = 'TravelingWave'
    FIXED_AXIS = 'FixedAxis'
    CONSTANT_IN_SPACE = 'ConstantInSpace'
    CONSTANT_IN_SPACE_TIME = 'ConstantInSpaceTime'
    STEADY_SUBEQUATION = 'SteadySubEquation'
    NONE = 'None'


class Verdict(Enum):
    """Outcome of checking a trajectory against its prediction."""
    CONSISTENT_SYMMETRIC = 'ConsistentSymmetricPrediction'
    CONSISTENT_SYMMETRY_LOST = 'ConsistentSymmetryLost'
    THEOREM_VIOLATION = 'TheoremViolation'
    INCONCLUSIVE = 'Inconclusive'

    @property
    def exit_code(self):
        if self in (Verdict.CONSISTENT_SYMMETRIC, Verdict.CONSISTENT_SYMMETRY_LOST):
            return 0
        if self is Verdict.THEOREM_VIOLATION:
            return 2
        return 3


class SpeedMethod(Enum):
    AXIS_SLOPE = 'AxisSlope'
    PHASE_REGRESSION = 'PhaseRegression'


@dataclass
class ValidationReport:
    """Violations (fatal) and warnings (advisory) found by validate_spec."""
    equation: str
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def to_dict(self):
        return {
            'equation': self.equation,
            'passed': self.passed,
            'violations': list(self.violations),
            'warnings': list(self.warnings),
        }


@dataclass(frozen=True)
class ComponentParity:
    """Parity of one row: its left symbol and each of its terms."""
    left: object
    terms: tuple

    def to_dict(self):
        return {'left': self.left.value, 'terms': [p.value for p in self.terms]}


@dataclass
class ClassificationReport:
    """
    Classification of one equation.

    Attributes:
        equation: Equation name
        dimension: Number of components
        label: Principle
        components: ComponentParity per row
        predicted: Prediction
        steady_terms: Printed odd terms of the steady sub-equation (P3_weak)
        citations: Statements of the principles the label rests on
        classify_only: Copied from the equation
        local_form: True when the parities come from a local-form stand-in
        flux: LocalFluxView for scalar equations, else None
        notes: Free-text remarks
    """
    equation: str
    dimension: int
    label: Principle
    components: list
    predicted: Prediction
    steady_terms: list = field(default_factory=list)
    citations: list = field(default_factory=list)
    classify_only: bool = False
    local_form: bool = False
    flux: object = None
    notes: list = field(default_factory=list)

    def one_line(self):
        """Row for the catalog table: name | dim | label | predicted."""
        predicted = self.predicted.value
        if self.classify_only:
            predicted += ' (classify_only)'
        return f'{self.equation} | {self.dimension} | {self.label.value} | {predicted}'

    def to_dict(self):
        return {
            'equation': self.equation,
            'dimension': self.dimension,
            'label': self.label.value,
            'predicted': self.predicted.value,
            'components': [c.to_dict() for c in self.components],
            'steady_terms': list(self.steady_terms),
            'citations': list(self.citations),
            'classify_only': self.classify_only,
            'local_form': self.local_form,
            'flux': self.flux.to_dict() if self.flux is not None else None,
            'notes': list(self.notes),
        }


@dataclass(frozen=True)
class AxisEstimate:
    """Axis of symmetry lam in [0, L/2), its defect and whether it is defined."""
    lam: float
    defect: float
    valid: bool = True

    def to_dict(self):
        return {'lambda': self.lam, 'defect': self.defect, 'valid': self.valid}


@dataclass(frozen=True)
class SpeedEstimate:
    c: float
    residual: float
    method: SpeedMethod

    def to_dict(self):
        return {'c': self.c, 'residual': self.residual, 'method': self.method.value}


@dataclass(frozen=True)
class Tolerances:
    sym_tol: float = 1e-6
    pred_tol: float = 1e-4

    def to_dict(self):
        return {'sym_tol': self.sym_tol, 'pred_tol': self.pred_tol}


@dataclass
class VerificationReport:
    """
    Result of verifying one trajectory against its classification.

    Attributes:
        classification: The ClassificationReport echoed back
        times: Snapshot times
        axis: Unwrapped axis lam(t)
        defects: Symmetry defect d(t) at the tracked axis
        speeds: SpeedEstimate list (empty when fewer than three snapshots)
        verdict: Verdict
        diagnostics: Human-readable lines explaining the verdict
        steady_residuals: Per-snapshot sub-equation residuals (P3_weak)
        tolerances: Tolerances used
    """
    classification: ClassificationReport
    times: list
    axis: list
    defects: list
    speeds: list
    verdict: Verdict
    diagnostics: list = field(default_factory=list)
    steady_residuals: list = field(default_factory=list)
    tolerances: Tolerances = field(default_factory=Tolerances)
    defect_norm: str = 'relative L2 over all components'

    @property
    def max_defect(self):
        return max(self.defects, default=0.0)

    @property
    def exit_code(self):
        return self.verdict.exit_code

    def speed(self, method):
        for estimate in self.speeds:
            if estimate.method is method:
                return estimate
        return None

    def to_dict(self):
        return {
            'classification': self.classification.to_dict(),
            'verdict': self.verdict.value,
            'defect_norm': self.defect_norm,
            'max_defect': self.max_defect,
            'tolerances': self.tolerances.to_dict(),
            'times': [float(t) for t in self.times],
            'axis': [float(a) for a in self.axis],
            'defects': [float(d) for d in self.defects],
            'speeds': [s.to_dict() for s in self.speeds],
            'steady_residuals': [float(r) for r in self.steady_residuals],
            'diagnostics': list(self.diagnostics),
        }
