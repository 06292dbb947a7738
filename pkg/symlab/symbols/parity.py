"""
Parity of symbols under xi -> -xi.

parity_symbolic applies structural rules and only answers Even or Odd when the
rule is a proof; everything else is Indefinite. parity_numeric samples the
symbol at quasi-random points as a cross-check.
"""

import dataclasses
import logging
from functools import singledispatch

import numpy as np
from scipy.stats import qmc

from symlab.errors import ParityError
from symlab.models.symbol import (
    Abs, Add, BinaryOp, Const, Cos, Div, Exp, Function, Gaussian, ImagUnit,
    Mul, Neg, Parity, Pow, Sech, Sech2, Sign, Sin, Sqrt, Sub, SymbolExpr,
    Tanh, Var, Where0,
)

logger = logging.getLogger(__name__)

EVEN, ODD, INDEFINITE = Parity.EVEN, Parity.ODD, Parity.INDEFINITE

PARITY_TOLERANCE = 1e-12
MIN_SAMPLES = 8


def _is_zero(expr):
    return isinstance(expr, Const) and expr.value == 0


@singledispatch
def parity_symbolic(expr):
    """Structural parity of expr; never reports a parity that does not hold."""
    return INDEFINITE


@parity_symbolic.register(Const)
@parity_symbolic.register(ImagUnit)
def _(expr):
    return EVEN


@parity_symbolic.register
def _(expr: Var):
    return ODD


@parity_symbolic.register
def _(expr: Neg):
    return parity_symbolic(expr.arg)


@parity_symbolic.register
def _(expr: BinaryOp):
    if isinstance(expr, (Add, Sub)):
        if _is_zero(expr.left):
            return parity_symbolic(expr.right)
        if _is_zero(expr.right):
            return parity_symbolic(expr.left)
        left, right = parity_symbolic(expr.left), parity_symbolic(expr.right)
        return left if left is right else INDEFINITE
    return parity_symbolic(expr.left) * parity_symbolic(expr.right)


@parity_symbolic.register
def _(expr: Pow):
    base = parity_symbolic(expr.base)
    if base is EVEN:
        return EVEN
    if base is ODD and expr.integer_exponent:
        return EVEN if int(expr.exponent) % 2 == 0 else ODD
    return INDEFINITE


@parity_symbolic.register
def _(expr: Function):
    inner = parity_symbolic(expr.arg)
    if not inner.is_definite:
        return INDEFINITE
    if isinstance(expr, (Abs, Sech, Cos)):
        return EVEN
    if isinstance(expr, (Tanh, Sign, Sin)):
        return inner
    # exp and the principal square root are only even of even arguments
    if isinstance(expr, (Exp, Sqrt)) and inner is EVEN:
        return EVEN
    return INDEFINITE


@parity_symbolic.register
def _(expr: Where0):
    inner = parity_symbolic(expr.expr)
    if inner is EVEN:
        return EVEN
    if inner is ODD:
        from symlab.symbols.evaluate import evaluate_masked
        value, pole, overflow = evaluate_masked(expr.value, np.zeros(1))
        if not (pole[0] or overflow[0]) and value[0] == 0:
            return ODD
    return INDEFINITE


def parity_numeric(expr, samples=64, radius=10.0):
    """
    Parity of expr by sampling m(xi) and m(-xi).

    Points come from an unscrambled Halton sequence mapped onto (0, radius],
    so repeated calls sample the same frequencies. Poles and overflows are
    skipped.

    Raises:
        ValueError: samples < 8 or radius <= 0.
        ParityError: every sample point was unusable.
    """
    from symlab.symbols.evaluate import evaluate_masked

    if samples < MIN_SAMPLES:
        raise ValueError(f'parity_numeric needs at least {MIN_SAMPLES} samples, got {samples}')
    if radius <= 0:
        raise ValueError(f'radius must be positive, got {radius}')

    unit = qmc.Halton(d=1, scramble=False).random(samples)[:, 0]
    xi = radius * (1.0 - unit)

    plus, plus_pole, plus_overflow = evaluate_masked(expr, xi)
    minus, minus_pole, minus_overflow = evaluate_masked(expr, -xi)
    usable = ~(plus_pole | plus_overflow | minus_pole | minus_overflow)
    if not np.any(usable):
        raise ParityError(f'no usable sample point for {expr} in (0, {radius}]')
    if not np.all(usable):
        logger.debug('parity_numeric skipped %d of %d points', samples - usable.sum(), samples)

    plus, minus = plus[usable], minus[usable]
    scale = np.maximum(1.0, np.abs(plus))
    if np.max(np.abs(minus - plus) / scale) < PARITY_TOLERANCE:
        return EVEN
    if np.max(np.abs(minus + plus) / scale) < PARITY_TOLERANCE:
        return ODD
    return INDEFINITE


def is_real(expr):
    """True when expr is real for every real value of the variable."""
    if isinstance(expr, (Const, Var, Abs, Gaussian, Sech2)):
        return True
    if isinstance(expr, ImagUnit):
        return False
    if isinstance(expr, Neg):
        return is_real(expr.arg)
    if isinstance(expr, BinaryOp):
        return is_real(expr.left) and is_real(expr.right)
    if isinstance(expr, Pow):
        return is_real(expr.base) and (expr.integer_exponent or is_nonnegative(expr.base))
    if isinstance(expr, Sqrt):
        return is_nonnegative(expr.arg)
    if isinstance(expr, Function):
        return is_real(expr.arg)
    if isinstance(expr, Where0):
        return is_real(expr.expr) and is_real(expr.value)
    return False


def is_nonnegative(expr):
    """True when expr is provably real and >= 0 (abs, sech, squares, ...)."""
    if isinstance(expr, Const):
        return expr.value >= 0
    if isinstance(expr, (Abs, Gaussian, Sech2)):
        return True
    if isinstance(expr, (Sech, Exp)):
        return is_real(expr.arg)
    if isinstance(expr, Sqrt):
        return is_nonnegative(expr.arg)
    if isinstance(expr, Pow):
        if expr.integer_exponent and int(expr.exponent) % 2 == 0:
            return is_real(expr.base)
        return is_nonnegative(expr.base)
    if isinstance(expr, (Add, Mul, Div)):
        return is_nonnegative(expr.left) and is_nonnegative(expr.right)
    if isinstance(expr, Where0):
        return is_nonnegative(expr.expr) and is_nonnegative(expr.value)
    return False


def reflect_symbol(expr):
    """Compose expr with xi -> -xi."""
    if isinstance(expr, Var):
        return Neg(expr)
    changes = {
        f.name: reflect_symbol(getattr(expr, f.name))
        for f in dataclasses.fields(expr)
        if isinstance(getattr(expr, f.name), SymbolExpr)
    }
    return dataclasses.replace(expr, **changes) if changes else expr


def _product_factors(expr):
    if isinstance(expr, Mul):
        return _product_factors(expr.left) + _product_factors(expr.right)
    if isinstance(expr, Neg):
        return _product_factors(expr.arg)
    if isinstance(expr, Pow) and expr.integer_exponent and expr.exponent >= 1:
        return _product_factors(expr.base) * int(expr.exponent)
    return [expr]


def has_derivative_factor(expr):
    """True when expr is a product carrying an overall factor i*xi."""
    factors = _product_factors(expr)
    return (any(isinstance(f, ImagUnit) for f in factors)
            and any(isinstance(f, Var) for f in factors))
