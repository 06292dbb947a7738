"""
Symbol language.

Parses, prints, evaluates and classifies by parity the Fourier multiplier
symbols m(xi) that make up an equation, and the initial-condition fields u(x)
written in the same grammar.
"""

from symlab.symbols.evaluate import eval_symbol, evaluate_masked, evaluate_symbol_array
from symlab.symbols.grammar import SYMBOL_DIALECT, field_dialect, parse_expression
from symlab.symbols.parity import (
    has_derivative_factor, is_nonnegative, parity_numeric, parity_symbolic,
    reflect_symbol,
)
from symlab.symbols.printer import format_symbol


def parse_symbol(text):
    """Parse a symbol string over the variable xi."""
    return parse_expression(text, SYMBOL_DIALECT)


def parse_field(text, length):
    """Parse an initial-condition expression over x on a period of the given length."""
    return parse_expression(text, field_dialect(length))


__all__ = [
    'parse_symbol', 'parse_field', 'format_symbol', 'eval_symbol',
    'evaluate_masked', 'evaluate_symbol_array', 'parity_symbolic',
    'parity_numeric', 'reflect_symbol', 'is_nonnegative', 'has_derivative_factor',
]
