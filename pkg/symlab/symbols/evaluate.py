"""
Vectorised evaluation of symbol expressions.

Every node evaluates to a complex array together with a pole mask. Poles are
division by zero, negative powers of zero and zeros of cosh; they are reported
instead of silently turning into inf or nan. Real arguments are evaluated with
the real branch of each function so that odd functions stay exactly odd.
"""

import logging

import numpy as np

from symlab.errors import SymbolOverflowError, SymbolPoleError

logger = logging.getLogger(__name__)


def _is_real(values):
    return not np.any(values.imag)


def _apply(values, real_fn, complex_fn=None):
    if _is_real(values):
        return real_fn(values.real).astype(np.complex128)
    return (complex_fn or real_fn)(values)


def _int_power(base, n):
    """base**n for integer n by binary exponentiation (sign-symmetric)."""
    result = np.ones_like(base)
    square = base.copy()
    k = abs(int(n))
    while k:
        if k & 1:
            result = result * square
        square = square * square
        k >>= 1
    return result


def _periodic_distance(x, center, period):
    d = x - center
    if period is None:
        return d
    return np.mod(d + period / 2.0, period) - period / 2.0


class _Evaluator:
    """Walks an expression tree once for a fixed array of sample points."""

    def __init__(self, points, period=None):
        self.points = np.asarray(points, dtype=np.float64)
        self.period = period

    def __call__(self, expr):
        method = getattr(self, '_' + type(expr).__name__.lower(), None)
        if method is None:
            raise TypeError(f'cannot evaluate {type(expr).__name__}')
        return method(expr)

    def _shape(self, fill):
        return np.full(self.points.shape, fill, dtype=np.complex128)

    def _none(self):
        return np.zeros(self.points.shape, dtype=bool)

    # Leaves

    def _const(self, expr):
        return self._shape(expr.value), self._none()

    def _imagunit(self, expr):
        return self._shape(1j), self._none()

    def _var(self, expr):
        return self.points.astype(np.complex128), self._none()

    # Arithmetic

    def _neg(self, expr):
        values, pole = self(expr.arg)
        return -values, pole

    def _binary(self, expr, op):
        left, left_pole = self(expr.left)
        right, right_pole = self(expr.right)
        return op(left, right), left_pole | right_pole

    def _add(self, expr):
        return self._binary(expr, np.add)

    def _sub(self, expr):
        return self._binary(expr, np.subtract)

    def _mul(self, expr):
        return self._binary(expr, np.multiply)

    def _div(self, expr):
        left, left_pole = self(expr.left)
        right, right_pole = self(expr.right)
        zero = right == 0
        safe = np.where(zero, 1.0, right)
        return np.where(zero, np.nan, left / safe), left_pole | right_pole | zero

    def _pow(self, expr):
        base, pole = self(expr.base)
        exponent = float(expr.exponent)
        if exponent < 0:
            pole = pole | (base == 0)
            base = np.where(base == 0, 1.0, base)
        if expr.integer_exponent:
            values = _int_power(base, exponent)
            if exponent < 0:
                values = 1.0 / values
        else:
            # Parser guarantees a nonnegative base here.
            values = np.power(base.real, exponent).astype(np.complex128)
        return np.where(pole, np.nan, values), pole

    # Functions

    def _abs(self, expr):
        values, pole = self(expr.arg)
        return np.abs(values).astype(np.complex128), pole

    def _sqrt(self, expr):
        values, pole = self(expr.arg)
        live = values[~pole]
        if _is_real(live) and np.all(live.real >= 0):
            return np.sqrt(values.real).astype(np.complex128), pole
        return np.sqrt(values), pole

    def _exp(self, expr):
        values, pole = self(expr.arg)
        return _apply(values, np.exp), pole

    def _tanh(self, expr):
        values, pole = self(expr.arg)
        return _apply(values, np.tanh), pole

    def _sech(self, expr):
        values, pole = self(expr.arg)
        cosh = _apply(values, np.cosh)
        zero = cosh == 0
        return np.where(zero, np.nan, 1.0 / np.where(zero, 1.0, cosh)), pole | zero

    def _sign(self, expr):
        values, pole = self(expr.arg)
        if _is_real(values):
            return np.sign(values.real).astype(np.complex128), pole
        modulus = np.abs(values)
        return np.where(modulus == 0, 0.0, values / np.where(modulus == 0, 1.0, modulus)), pole

    def _cos(self, expr):
        values, pole = self(expr.arg)
        return _apply(values, np.cos), pole

    def _sin(self, expr):
        values, pole = self(expr.arg)
        return _apply(values, np.sin), pole

    # Guards and helpers

    def _where0(self, expr):
        values, pole = self(expr.expr)
        at_zero = self.points == 0
        if not np.any(at_zero):
            return values, pole
        pinned, pinned_pole = self(expr.value)
        return np.where(at_zero, pinned, values), np.where(at_zero, pinned_pole, pole)

    def _bump(self, center_expr, scale_expr, profile):
        center, center_pole = self(center_expr)
        scale, scale_pole = self(scale_expr)
        d = _periodic_distance(self.points, center.real, self.period)
        return profile(d, scale.real).astype(np.complex128), center_pole | scale_pole

    def _gaussian(self, expr):
        return self._bump(expr.center, expr.width, lambda d, w: np.exp(-(d / w) ** 2))

    def _sech2(self, expr):
        return self._bump(expr.center, expr.scale, lambda d, s: 1.0 / np.cosh(s * d) ** 2)


def evaluate_masked(expr, points, period=None):
    """
    Evaluate expr at every point.

    Returns:
        (values, pole_mask, overflow_mask); values are complex128 and are
        nan wherever a mask is set.
    """
    with np.errstate(all='ignore'):
        values, pole = _Evaluator(points, period)(expr)
        values = np.asarray(values, dtype=np.complex128)
        overflow = ~np.isfinite(values) & ~pole
    return values, pole, overflow


def evaluate_symbol_array(expr, points, period=None):
    """Evaluate expr on an array, raising on poles or non-finite values."""
    points = np.asarray(points, dtype=np.float64)
    values, pole, overflow = evaluate_masked(expr, points, period)
    if np.any(pole):
        bad = points[pole]
        logger.debug('pole of %s at %d point(s)', expr, bad.size)
        raise SymbolPoleError(f'{expr} has a pole at {bad[0]!r}', bad)
    if np.any(overflow):
        bad = points[overflow]
        raise SymbolOverflowError(f'{expr} overflows at {bad[0]!r}', bad)
    return values


def eval_symbol(expr, xi):
    """Value of the symbol at a single real frequency."""
    return complex(evaluate_symbol_array(expr, np.array([float(xi)]))[0])
