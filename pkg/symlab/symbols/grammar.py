"""
Grammar of the symbol language.

    expr   :: term (('+' | '-') term)*
    term   :: factor (('*' | '/') factor)*
    factor :: '-' factor | base ('^' exponent)?
    base   :: number | name | ident '(' expr (',' expr)* ')' | '(' expr ')'

Two dialects share the grammar: the symbol dialect (variable ``xi``) used for
Fourier multipliers, and the field dialect (variable ``x``, constants ``pi``
and ``L``, helpers gaussian/sech2/cos/sin) used for initial conditions.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from pyparsing import (
    Forward, Literal, ParseBaseException, Regex, Suppress, Word, ZeroOrMore,
    Group, Optional, alphanums, alphas, one_of,
)

from symlab.errors import (
    ComplexPowerError, SymbolSyntaxError, UnknownIdentifierError,
)
from symlab.models.symbol import (
    Add, Const, Div, I, Mul, Neg, Pow, Sub, XI, BINARY_FUNCTIONS,
    UNARY_FUNCTIONS,
)
from symlab.symbols.parity import is_nonnegative

MAX_DEPTH = 64

_BINARY = {'+': Add, '-': Sub, '*': Mul, '/': Div}


@dataclass(frozen=True)
class Dialect:
    """Names a grammar instance accepts."""
    variable: str
    functions: frozenset
    constants: tuple = field(default=())

    def constant(self, name):
        return dict(self.constants).get(name)


SYMBOL_DIALECT = Dialect(
    variable='xi',
    functions=frozenset({'abs', 'sqrt', 'exp', 'tanh', 'sech', 'sign', 'where0'}),
)

FIELD_FUNCTIONS = frozenset({
    'abs', 'sqrt', 'exp', 'tanh', 'sech', 'sign', 'where0',
    'cos', 'sin', 'gaussian', 'sech2',
})


def field_dialect(length):
    """Dialect for initial-condition expressions on a period of the given length."""
    return Dialect(
        variable='x',
        functions=FIELD_FUNCTIONS,
        constants=(('pi', 3.141592653589793), ('L', float(length))),
    )


def _fold(tokens):
    items = list(tokens)
    node = items[0]
    for op, operand in zip(items[1::2], items[2::2]):
        node = _BINARY[op](node, operand)
    return node


class _Builder:
    """Parse actions turning tokens into expression nodes."""

    def __init__(self, dialect):
        self.dialect = dialect

    def number(self, tokens):
        return Const(float(tokens[0]))

    def name(self, text, loc, tokens):
        name = tokens[0]
        if name == 'i':
            return I
        if name == self.dialect.variable:
            return XI
        value = self.dialect.constant(name)
        if value is not None:
            return Const(value)
        raise UnknownIdentifierError(f"unknown identifier '{name}'", loc, text)

    def call(self, text, loc, tokens):
        name, args = tokens[0], list(tokens[1])
        if name not in self.dialect.functions:
            raise UnknownIdentifierError(f"unknown identifier '{name}'", loc, text)
        if name in UNARY_FUNCTIONS:
            if len(args) != 1:
                raise SymbolSyntaxError(f'{name}() takes 1 argument, got {len(args)}', loc, text)
            return UNARY_FUNCTIONS[name](args[0])
        if len(args) != 2:
            raise SymbolSyntaxError(f'{name}() takes 2 arguments, got {len(args)}', loc, text)
        return BINARY_FUNCTIONS[name](args[0], args[1])

    def exponent(self, tokens):
        value = float(tokens[-1])
        return -value if tokens[0] == '-' else value

    def power(self, text, loc, tokens):
        if len(tokens) == 1:
            return tokens[0]
        base, exponent = tokens[0], tokens[1]
        if not float(exponent).is_integer() and not is_nonnegative(base):
            raise ComplexPowerError(
                f'non-integer exponent {exponent} on a base that may change sign', loc, text)
        return Pow(base, exponent)

    def negate(self, tokens):
        return Neg(tokens[0])


@lru_cache(maxsize=None)
def build_grammar(dialect):
    """Build (once per dialect) the pyparsing element for a full expression."""
    builder = _Builder(dialect)

    lpar, rpar, comma = Suppress('('), Suppress(')'), Suppress(',')
    number_text = Regex(r'(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?')
    number = number_text.copy().set_parse_action(builder.number)
    identifier = Word(alphas, alphanums + '_')

    expr = Forward()
    arguments = Group(expr + ZeroOrMore(comma + expr))
    call = (identifier + lpar + arguments + rpar).set_parse_action(builder.call)
    name = identifier.copy().set_parse_action(builder.name)
    base = number | call | name | (lpar + expr + rpar)

    signed = Optional(Literal('-')) + number_text
    exponent = (signed | (lpar + signed + rpar)).set_parse_action(builder.exponent)

    factor = Forward()
    negated = (Suppress('-') + factor).set_parse_action(builder.negate)
    powered = (base + Optional(Suppress('^') + exponent)).set_parse_action(builder.power)
    factor <<= negated | powered

    term = (factor + ZeroOrMore(one_of('* /') + factor)).set_parse_action(_fold)
    expr <<= (term + ZeroOrMore(one_of('+ -') + term)).set_parse_action(_fold)
    return expr


def parse_expression(text, dialect=SYMBOL_DIALECT):
    """Parse text in the given dialect; raises SymbolSyntaxError subclasses."""
    if not isinstance(text, str):
        raise SymbolSyntaxError('symbol must be a string', 0)
    for offset, char in enumerate(text):
        if not char.isascii():
            raise SymbolSyntaxError(f'non-ASCII character {char!r}', offset, text)
    if not text.strip():
        raise SymbolSyntaxError('empty expression', 0, text)

    try:
        result = build_grammar(dialect).parse_string(text, parse_all=True)
    except ParseBaseException as exc:
        raise SymbolSyntaxError(f'syntax error: {exc.msg}', exc.loc, text) from None
    except RecursionError:
        raise SymbolSyntaxError('expression nested too deeply', 0, text) from None

    expr = result[0]
    if expr.depth > MAX_DEPTH:
        raise SymbolSyntaxError(f'expression deeper than {MAX_DEPTH} levels', 0, text)
    return expr
