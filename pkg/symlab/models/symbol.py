"""
Symbol expression model.

Immutable expression trees for Fourier multiplier symbols m(xi) and, in the
initial-condition dialect, for fields u(x). Nodes are frozen dataclasses, so
trees compare structurally and can be shared between threads.

Node families:
- leaves: Const, ImagUnit, Var
- arithmetic: Neg, Add, Sub, Mul, Div, Pow
- functions: Abs, Sqrt, Exp, Tanh, Sech, Sign (symbols); Cos, Sin (fields)
- guards and helpers: Where0, Gaussian, Sech2
"""

from dataclasses import dataclass
from enum import Enum


class Parity(Enum):
    """Parity of a symbol under xi -> -xi."""
    EVEN = 'even'
    ODD = 'odd'
    INDEFINITE = 'indefinite'

    @property
    def is_definite(self):
        return self is not Parity.INDEFINITE

    def __mul__(self, other):
        """Parity of a product (or quotient) of two symbols."""
        if not isinstance(other, Parity):
            return NotImplemented
        if Parity.INDEFINITE in (self, other):
            return Parity.INDEFINITE
        return Parity.EVEN if self is other else Parity.ODD

    def opposite(self):
        if self is Parity.EVEN:
            return Parity.ODD
        if self is Parity.ODD:
            return Parity.EVEN
        return Parity.INDEFINITE


class SymbolExpr:
    """Base class of all expression nodes."""

    def children(self):
        return ()

    @property
    def depth(self):
        kids = self.children()
        if not kids:
            return 1
        return 1 + max(child.depth for child in kids)

    def __str__(self):
        from symlab.symbols.printer import format_symbol
        return format_symbol(self)


@dataclass(frozen=True, eq=True)
class Const(SymbolExpr):
    value: float


@dataclass(frozen=True, eq=True)
class ImagUnit(SymbolExpr):
    pass


@dataclass(frozen=True, eq=True)
class Var(SymbolExpr):
    """The independent variable (xi for symbols, x for fields)."""


@dataclass(frozen=True, eq=True)
class Neg(SymbolExpr):
    arg: SymbolExpr

    def children(self):
        return (self.arg,)


@dataclass(frozen=True, eq=True)
class BinaryOp(SymbolExpr):
    left: SymbolExpr
    right: SymbolExpr
    symbol = '?'

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Add(BinaryOp):
    symbol = '+'


@dataclass(frozen=True, eq=True)
class Sub(BinaryOp):
    symbol = '-'


@dataclass(frozen=True, eq=True)
class Mul(BinaryOp):
    symbol = '*'


@dataclass(frozen=True, eq=True)
class Div(BinaryOp):
    symbol = '/'


@dataclass(frozen=True, eq=True)
class Pow(SymbolExpr):
    base: SymbolExpr
    exponent: float

    @property
    def integer_exponent(self):
        return float(self.exponent).is_integer()

    def children(self):
        return (self.base,)


@dataclass(frozen=True, eq=True)
class Function(SymbolExpr):
    arg: SymbolExpr
    name = '?'

    def children(self):
        return (self.arg,)


@dataclass(frozen=True, eq=True)
class Abs(Function):
    name = 'abs'


@dataclass(frozen=True, eq=True)
class Sqrt(Function):
    name = 'sqrt'


@dataclass(frozen=True, eq=True)
class Exp(Function):
    name = 'exp'


@dataclass(frozen=True, eq=True)
class Tanh(Function):
    name = 'tanh'


@dataclass(frozen=True, eq=True)
class Sech(Function):
    name = 'sech'


@dataclass(frozen=True, eq=True)
class Sign(Function):
    name = 'sign'


@dataclass(frozen=True, eq=True)
class Cos(Function):
    name = 'cos'


@dataclass(frozen=True, eq=True)
class Sin(Function):
    name = 'sin'


@dataclass(frozen=True, eq=True)
class Where0(SymbolExpr):
    """expr everywhere except at the variable's zero, where value is used."""
    expr: SymbolExpr
    value: SymbolExpr
    name = 'where0'

    def children(self):
        return (self.expr, self.value)


@dataclass(frozen=True, eq=True)
class Gaussian(SymbolExpr):
    """exp(-(d/width)^2), d the (periodic) distance to center."""
    center: SymbolExpr
    width: SymbolExpr
    name = 'gaussian'

    def children(self):
        return (self.center, self.width)


@dataclass(frozen=True, eq=True)
class Sech2(SymbolExpr):
    """sech(scale*d)^2, d the (periodic) distance to center."""
    center: SymbolExpr
    scale: SymbolExpr
    name = 'sech2'

    def children(self):
        return (self.center, self.scale)


I = ImagUnit()
XI = Var()
ZERO = Const(0.0)
ONE = Const(1.0)

UNARY_FUNCTIONS = {cls.name: cls for cls in (Abs, Sqrt, Exp, Tanh, Sech, Sign, Cos, Sin)}
BINARY_FUNCTIONS = {cls.name: cls for cls in (Where0, Gaussian, Sech2)}
