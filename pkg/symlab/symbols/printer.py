"""Canonical printer for symbol expressions (inverse of the parser)."""

from functools import singledispatch

from symlab.models.symbol import (
    Add, BinaryOp, Const, Div, Function, Gaussian, ImagUnit, Mul, Neg, Pow,
    Sech2, Sub, Var, Where0,
)

# Binding strength, loosest first; mirrors the grammar levels.
_SUM, _PRODUCT, _UNARY, _POWER, _ATOM = 1, 2, 3, 4, 5


def format_number(value):
    value = float(value)
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_symbol(expr, variable='xi'):
    """Print expr with the fewest parentheses that parse back to the same tree."""
    text, _ = _render(expr, variable)
    return text


def _wrap(expr, variable, minimum):
    text, level = _render(expr, variable)
    if level < minimum:
        return f'({text})'
    return text


@singledispatch
def _render(expr, variable):
    raise TypeError(f'cannot print {type(expr).__name__}')


@_render.register
def _(expr: Const, variable):
    if expr.value < 0:
        return '-' + format_number(-expr.value), _UNARY
    return format_number(expr.value), _ATOM


@_render.register
def _(expr: ImagUnit, variable):
    return 'i', _ATOM


@_render.register
def _(expr: Var, variable):
    return variable, _ATOM


@_render.register
def _(expr: Neg, variable):
    return '-' + _wrap(expr.arg, variable, _UNARY), _UNARY


@_render.register
def _(expr: BinaryOp, variable):
    if isinstance(expr, (Add, Sub)):
        level = _SUM
    elif isinstance(expr, (Mul, Div)):
        level = _PRODUCT
    else:
        raise TypeError(f'cannot print {type(expr).__name__}')
    # Left-associative: the right operand must bind tighter than the operator.
    left = _wrap(expr.left, variable, level)
    right = _wrap(expr.right, variable, level + 1)
    return f'{left}{expr.symbol}{right}', level


@_render.register
def _(expr: Pow, variable):
    base = _wrap(expr.base, variable, _ATOM)
    if expr.exponent < 0:
        exponent = f'(-{format_number(-expr.exponent)})'
    else:
        exponent = format_number(expr.exponent)
    return f'{base}^{exponent}', _POWER


@_render.register
def _(expr: Function, variable):
    return f'{expr.name}({format_symbol(expr.arg, variable)})', _ATOM


@_render.register(Where0)
@_render.register(Gaussian)
@_render.register(Sech2)
def _(expr, variable):
    args = ', '.join(format_symbol(child, variable) for child in expr.children())
    return f'{expr.name}({args})', _ATOM
