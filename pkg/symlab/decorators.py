"""
Precondition decorators.

Guards shared by several operations, written once:

    @scalar_equation
    def extract_local_flux(spec):
        ...

    @solver_backed
    def integrate(spec, ic, cfg):
        ...

    @exit_on_error
    def verify(config_path):
        ...

The first positional argument of a guarded function is the EquationSpec.
"""

import logging
import sys
from functools import wraps

import click

from symlab.errors import (
    BlowUpError, ClassifyOnlyError, ConfigError, DimensionError, EquationError,
    SymbolError, SymlabError, ValidationFailedError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INCONCLUSIVE = 3
EXIT_CONFIG = 64
EXIT_VALIDATION = 65


def scalar_equation(f):
    """Reject equations with more than one component."""
    @wraps(f)
    def decorated_function(spec, *args, **kwargs):
        if spec.dimension != 1:
            raise DimensionError(
                f'{f.__name__} needs a scalar equation; {spec.name} has dimension {spec.dimension}')
        return f(spec, *args, **kwargs)
    return decorated_function


def solver_backed(f):
    """Reject classification-only equations."""
    @wraps(f)
    def decorated_function(spec, *args, **kwargs):
        if spec.classify_only:
            raise ClassifyOnlyError(f'{spec.name} is classify_only and cannot be simulated')
        return f(spec, *args, **kwargs)
    return decorated_function


def exit_code_for(exc):
    """Map an exception onto the CLI exit-code contract."""
    if isinstance(exc, ConfigError):
        return EXIT_CONFIG
    if isinstance(exc, (ValidationFailedError, EquationError, SymbolError)):
        return EXIT_VALIDATION
    return EXIT_INCONCLUSIVE


def exit_on_error(f):
    """
    Turn library errors raised by a CLI command into messages and exit codes.

    The wrapped command returns an exit code; SymlabError subclasses are
    reported on stderr and mapped by exit_code_for.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            code = f(*args, **kwargs)
        except BlowUpError as exc:
            logger.error('Blow-up at t=%.6g: %s', exc.time, exc)
            click.echo(f'Error: {exc}', err=True)
            code = EXIT_INCONCLUSIVE
        except SymlabError as exc:
            click.echo(f'Error: {exc}', err=True)
            for violation in getattr(exc, 'violations', ()):
                click.echo(f'  - {violation}', err=True)
            code = exit_code_for(exc)
        sys.exit(code or EXIT_OK)
    return decorated_function
