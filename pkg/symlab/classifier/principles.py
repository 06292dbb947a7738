"""
Assignment of symmetry principles from symbol parities.

    P1         left and right-hand side of opposite parity (row by row):
               symmetric solutions are traveling waves.
    P2         left and right-hand side of the same parity:
               symmetric solutions keep a fixed axis.
    P3_strong  scalar, constant left symbol, odd part a nonlinear local flux
               (F1(u))_x, even part present: symmetric solutions are constant
               in space, and also in time when the even part is a derivative.
    P3_weak    any other mixed case: every symmetric snapshot solves the
               steady sub-equation -c u_x = F_odd(u) with c the axis velocity.
"""

import logging

from symlab.equations.structure import extract_local_flux, symbol_parity, term_parity
from symlab.models.report import (
    ClassificationReport, ComponentParity, Prediction, Principle,
)
from symlab.models.symbol import Const, Parity
from symlab.symbols import has_derivative_factor

logger = logging.getLogger(__name__)

CITATIONS = {
    Principle.P1: 'opposite parity: a solution symmetric on a time interval is steady, '
                  'traveling with the velocity of its axis',
    Principle.P2: 'same parity: a solution symmetric on a time interval has a fixed axis',
    Principle.P3_STRONG: 'odd local flux (F1(u))_x with invertible F1\' plus even remainder: '
                         'a symmetric solution depends only on time',
    Principle.P3_WEAK: 'mixed parity: each symmetric snapshot is a steady solution of '
                       '-c u_x = F_odd(u) with c the axis velocity',
}

CONSTANT_IN_TIME = 'even remainder is a derivative d/dx G: the constant is also constant in time'
COMPONENTWISE = 'parities compared component by component; all components share one axis'
LOCAL_FORM = 'local-form classification'
LINEAR_FLUX = 'odd part is a linear flux; F1\' is constant, hence not invertible'
FLUX_RANGE = 'F1\' invertibility is checked numerically over the solution range'


def _relation(left, parities):
    """'opposite', 'same', 'mixed', 'empty' or None (indefinite) for one row."""
    if not left.is_definite or not all(p.is_definite for p in parities):
        return None
    if not parities:
        return 'empty'
    if all(p is not left for p in parities):
        return 'opposite'
    if all(p is left for p in parities):
        return 'same'
    return 'mixed'


def _is_constant_symbol(expr):
    return isinstance(expr, Const) and expr.value != 0


def classify(spec):
    """Classify spec; see the module docstring for the rules."""
    components = []
    relations = []
    for component in range(spec.dimension):
        left = symbol_parity(spec.left[component])
        parities = tuple(term_parity(term) for term in spec.terms[component])
        components.append(ComponentParity(left, parities))
        relations.append(_relation(left, parities))

    flux = extract_local_flux(spec) if spec.dimension == 1 else None
    notes = []
    if spec.dimension > 1:
        notes.append(COMPONENTWISE)
    if spec.local_form:
        notes.append(LOCAL_FORM)

    steady_terms = []
    if None in relations:
        label, predicted = Principle.UNCLASSIFIED, Prediction.NONE
    elif 'opposite' in relations and all(r in ('opposite', 'empty') for r in relations):
        label, predicted = Principle.P1, Prediction.TRAVELING_WAVE
    elif all(r in ('same', 'empty') for r in relations):
        label, predicted = Principle.P2, Prediction.FIXED_AXIS
    else:
        label, predicted = _classify_mixed(spec, components, flux, notes)
        if label is Principle.P3_WEAK:
            for component, row in enumerate(components):
                steady_terms.extend(
                    str(term) for term, parity in zip(spec.terms[component], row.terms)
                    if parity is not row.left)

    citations = [CITATIONS[label]] if label in CITATIONS else []
    if predicted is Prediction.CONSTANT_IN_SPACE_TIME:
        citations.append(CONSTANT_IN_TIME)

    report = ClassificationReport(
        equation=spec.name,
        dimension=spec.dimension,
        label=label,
        components=components,
        predicted=predicted,
        steady_terms=steady_terms,
        citations=citations,
        classify_only=spec.classify_only,
        local_form=spec.local_form,
        flux=flux,
        notes=notes,
    )
    logger.debug('classified %s', report.one_line())
    return report


def _classify_mixed(spec, components, flux, notes):
    even_part = [
        term for term, parity in zip(spec.terms[0], components[0].terms)
        if parity is Parity.EVEN
    ] if spec.dimension == 1 else []

    strong_shape = (
        spec.dimension == 1
        and _is_constant_symbol(spec.left[0])
        and components[0].left is Parity.EVEN
        and flux is not None and flux.present and not flux.empty
        and even_part
    )
    if strong_shape and flux.is_linear:
        notes.append(LINEAR_FLUX)
        strong_shape = False
    if not strong_shape:
        return Principle.P3_WEAK, Prediction.STEADY_SUBEQUATION

    notes.append(FLUX_RANGE)
    if all(has_derivative_factor(term.outer) for term in even_part):
        return Principle.P3_STRONG, Prediction.CONSTANT_IN_SPACE_TIME
    return Principle.P3_STRONG, Prediction.CONSTANT_IN_SPACE
