"""Parity of pseudo-product terms and the local-flux view of scalar equations."""

import logging
from functools import lru_cache

from symlab.decorators import scalar_equation
from symlab.errors import ParityError
from symlab.models.equation import LocalFluxView
from symlab.models.symbol import Const, ImagUnit, Mul, Neg, Parity, Var
from symlab.symbols import parity_numeric, parity_symbolic

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def symbol_parity(expr, samples=64, radius=10.0):
    """parity_symbolic, falling back to sampling when no structural rule applies."""
    parity = parity_symbolic(expr)
    if parity.is_definite:
        return parity
    try:
        parity = parity_numeric(expr, samples, radius)
    except ParityError:
        return Parity.INDEFINITE
    logger.debug('numeric parity of %s: %s', expr, parity.value)
    return parity


def term_parity(term):
    """Parity of xi -> F(xi): parity(h) times the parity of every inner symbol."""
    parity = symbol_parity(term.outer)
    for factor in term.factors:
        parity = parity * symbol_parity(factor.inner)
    return parity


def _derivative_sign(expr):
    """1 for i*xi, -1 for i*(-xi) or -(i*xi), None for anything else."""
    sign = 1
    while isinstance(expr, Neg):
        sign, expr = -sign, expr.arg
    if not isinstance(expr, Mul):
        return None
    kinds = set()
    for side in (expr.left, expr.right):
        while isinstance(side, Neg):
            sign, side = -sign, side.arg
        kinds.add(type(side))
    return sign if kinds == {ImagUnit, Var} else None


def _is_identity(expr):
    return isinstance(expr, Const) and expr.value == 1


def is_local_flux_term(term):
    """coefficient * (+-i*xi) * (u_c)^n with every inner symbol 1 and a single component."""
    return (_derivative_sign(term.outer) is not None
            and all(_is_identity(f.inner) for f in term.factors)
            and len(set(term.components)) == 1)


def odd_terms(spec, component=0):
    return tuple(t for t in spec.terms[component] if term_parity(t) is Parity.ODD)


def even_terms(spec, component=0):
    return tuple(t for t in spec.terms[component] if term_parity(t) is Parity.EVEN)


@scalar_equation
def extract_local_flux(spec):
    """
    View the odd terms of a scalar equation as (F1(u))_x.

    A term coefficient * i*xi * (u^n)^ contributes coefficient to a_n of
    F1(u) = sum a_n u^n. The view is absent as soon as one odd term has
    another shape; with no odd terms it is present and empty.
    """
    odd = odd_terms(spec)
    if not all(is_local_flux_term(term) for term in odd):
        return LocalFluxView(present=False, odd_terms=odd)

    degree = max((term.degree for term in odd), default=0)
    coefficients = [0.0] * (degree + 1)
    for term in odd:
        coefficients[term.degree] += _derivative_sign(term.outer) * term.coefficient
    return LocalFluxView(present=True, coefficients=tuple(coefficients), odd_terms=odd)
