"""
Exception hierarchy for symlab.

Every error raised on purpose by the library derives from SymlabError so the
CLI can map failures onto its exit-code contract:

- ConfigError           -> exit 64 (unreadable or malformed experiment config)
- ValidationFailedError -> exit 65 (equation or initial condition rejected)
- BlowUpError           -> exit 3  (integration aborted)
"""


class SymlabError(Exception):
    """Base class for all symlab errors."""


# Symbol language

class SymbolError(SymlabError):
    """Base class for symbol parsing and evaluation errors."""


class SymbolSyntaxError(SymbolError):
    """Raised when a symbol string does not conform to the grammar."""

    def __init__(self, message, offset=0, text=None):
        super(SymbolSyntaxError, self).__init__(f'{message} (at offset {offset})')
        self.message = message
        self.offset = offset
        self.text = text


class UnknownIdentifierError(SymbolSyntaxError):
    """Raised for a function or name the grammar does not know."""


class ComplexPowerError(SymbolSyntaxError):
    """Raised for a non-integer power of a base that may change sign."""


class SymbolPoleError(SymbolError):
    """Raised when a symbol is evaluated at one of its poles."""

    def __init__(self, message, points=()):
        super(SymbolPoleError, self).__init__(message)
        self.points = tuple(float(p) for p in points)


class SymbolOverflowError(SymbolError):
    """Raised when a symbol evaluates to a non-finite value."""

    def __init__(self, message, points=()):
        super(SymbolOverflowError, self).__init__(message)
        self.points = tuple(float(p) for p in points)


class ParityError(SymbolError):
    """Raised when numeric parity sampling has no usable point."""


# Equations

class EquationError(SymlabError):
    """Base class for equation specification errors."""


class EquationNotFoundError(EquationError):
    """Raised when a catalog lookup fails."""


class ClassifyOnlyError(EquationError):
    """Raised when a classification-only equation is handed to the solver."""


class DimensionError(EquationError):
    """Raised when an operation requires a scalar (one-component) equation."""


# Solver

class SolverError(SymlabError):
    """Base class for spectral solver errors."""


class GridError(SolverError):
    """Raised for malformed grids or arrays that do not match a grid."""


class BlowUpError(SolverError):
    """Raised when the coefficient norm exceeds the blow-up threshold."""

    def __init__(self, message, time, trajectory=None):
        super(BlowUpError, self).__init__(message)
        self.time = time
        self.trajectory = trajectory


# Analysis

class AnalysisError(SymlabError):
    """Base class for symmetry analysis errors."""


class UnwrapAmbiguityError(AnalysisError):
    """Raised when consecutive axis estimates differ by about a quarter period."""


class RegressionError(AnalysisError):
    """Raised when a speed regression has too few usable modes or snapshots."""


class MismatchError(AnalysisError):
    """Raised when a trajectory does not belong to the given equation."""


# Runner

class ConfigError(SymlabError):
    """Raised when an experiment config cannot be read or parsed."""


class ValidationFailedError(SymlabError):
    """Raised when an experiment config references an invalid equation or IC."""

    def __init__(self, message, violations=()):
        super(ValidationFailedError, self).__init__(message)
        self.violations = list(violations)
