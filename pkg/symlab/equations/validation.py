"""Check an equation against a grid before it is simulated."""

import logging

import numpy as np

from symlab.models.equation import ZeroModePolicy
from symlab.models.report import ValidationReport
from symlab.symbols import evaluate_masked

logger = logging.getLogger(__name__)

VANISHING_TOLERANCE = 1e-12


def _format_points(points, limit=3):
    shown = ', '.join(f'{p:.6g}' for p in points[:limit])
    return shown + (' ...' if len(points) > limit else '')


def _check_symbol(report, expr, where, xi):
    values, pole, overflow = evaluate_masked(expr, xi)
    if np.any(pole):
        report.violations.append(f'{where} {expr} has a pole at ξ={_format_points(xi[pole])}')
    if np.any(overflow):
        report.violations.append(f'{where} {expr} is not finite at ξ={_format_points(xi[overflow])}')
    return values, pole | overflow


def max_dealias_fraction(degree):
    """Largest fraction of N/2 keeping degree-p products alias-free (2/3 for p = 2)."""
    return 2.0 / (degree + 1) if degree > 1 else 1.0


def validate_spec(spec, grid, dealias_fraction=2.0 / 3.0):
    """
    Validate spec on grid.

    Checks component bounds, pole-freeness of every symbol on the grid
    frequencies and that each left symbol stays above 1e-12 in modulus
    (xi = 0 is skipped when the spec declares ``zero_mode: exempt``).
    Products of degree p > 2 only warn when dealias_fraction exceeds 2/(p+1).

    Returns:
        ValidationReport; violations are data, never raised.
    """
    report = ValidationReport(spec.name)
    xi = grid.wavenumbers
    zero = xi == 0

    if len(spec.left) != spec.dimension or len(spec.terms) != spec.dimension:
        report.violations.append(
            f'{len(spec.left)} left symbols and {len(spec.terms)} term rows '
            f'for dimension {spec.dimension}')

    for component, left in enumerate(spec.left):
        where = f'left symbol of component {component}'
        values, bad = _check_symbol(report, left, where, xi)
        vanishing = (np.abs(values) <= VANISHING_TOLERANCE) & ~bad
        if spec.zero_mode is ZeroModePolicy.EXEMPT:
            vanishing &= ~zero
        if np.any(vanishing & zero):
            report.violations.append('left symbol vanishes at ξ=0')
        if np.any(vanishing & ~zero):
            report.violations.append(
                f'{where} vanishes at ξ={_format_points(xi[vanishing & ~zero])}')

    for component, term in spec.all_terms():
        where = f'term {term} of component {component}:'
        _check_symbol(report, term.outer, f'{where} outer symbol', xi)
        for j, factor in enumerate(term.factors):
            if not 0 <= factor.component < spec.dimension:
                report.violations.append(
                    f'{where} factor {j} references component {factor.component} '
                    f'of a {spec.dimension}-component system')
            _check_symbol(report, factor.inner, f'{where} inner symbol {j}', xi)

    degree = spec.max_degree
    if degree > 2 and dealias_fraction > max_dealias_fraction(degree) + 1e-12:
        report.warnings.append(
            f'degree-{degree} products alias with dealias_fraction={dealias_fraction:.4g}; '
            f'use at most {max_dealias_fraction(degree):.4g}')
    if spec.classify_only:
        report.warnings.append(f'{spec.name} is classify_only')

    for violation in report.violations:
        logger.warning('%s: %s', spec.name, violation)
    for warning in report.warnings:
        logger.info('%s: %s', spec.name, warning)
    return report
