"""
Equation model.

An equation P(D) u_t = F(D, u) is stored per component as a left symbol P and
a list of pseudo-product terms

    coefficient * h(xi) [ (g_1 u_{c_1}) * (g_2 u_{c_2}) * ... ]^(xi)

where h is the outer symbol and each factor applies an inner symbol g_j to
component c_j before the pointwise product.
"""

from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np
from numpy.polynomial import Polynomial

from symlab.models.symbol import SymbolExpr


class ZeroModePolicy(Enum):
    """Whether the left symbol may vanish at xi = 0."""
    STRICT = 'strict'
    EXEMPT = 'exempt'


@dataclass(frozen=True)
class Factor:
    """One factor of a pseudo-product: inner symbol applied to a component."""
    inner: SymbolExpr
    component: int = 0

    def to_dict(self):
        return {'inner': str(self.inner), 'component': self.component}


@dataclass(frozen=True)
class PseudoProductTerm:
    """
    Pseudo-product term.

    Attributes:
        coefficient: Real prefactor
        outer: Outer symbol h applied after the product
        factors: Ordered, nonempty tuple of Factor
    """
    coefficient: float
    outer: SymbolExpr
    factors: tuple

    @property
    def degree(self):
        return len(self.factors)

    @property
    def is_linear(self):
        return self.degree == 1

    @property
    def components(self):
        return tuple(f.component for f in self.factors)

    def scaled(self, factor):
        return PseudoProductTerm(self.coefficient * factor, self.outer, self.factors)

    def map_symbols(self, fn):
        factors = tuple(Factor(fn(f.inner), f.component) for f in self.factors)
        return PseudoProductTerm(self.coefficient, fn(self.outer), factors)

    def __str__(self):
        product = ' * '.join(f'[{f.inner}]u{f.component}' for f in self.factors)
        return f'{self.coefficient:g} * ({self.outer}) ({product})'

    def to_dict(self):
        return {
            'coefficient': self.coefficient,
            'outer': str(self.outer),
            'factors': [f.to_dict() for f in self.factors],
        }


@dataclass(frozen=True)
class EquationSpec:
    """
    Equation in pseudo-product form.

    Attributes:
        name: Catalog key or user-chosen name
        dimension: Number of unknown components
        left: Left symbol P per component
        terms: Per component, the tuple of PseudoProductTerm on the right
        notes: Free text describing the equation
        classify_only: True when the solver must not run this equation
        zero_mode: Whether P may vanish at xi = 0
        local_form: True when the terms stand in for a non-polynomial local
            nonlinearity with the same parity structure
    """
    name: str
    dimension: int
    left: tuple
    terms: tuple
    notes: str = ''
    classify_only: bool = False
    zero_mode: ZeroModePolicy = ZeroModePolicy.STRICT
    local_form: bool = False

    def component_terms(self, component):
        return self.terms[component]

    def all_terms(self):
        """Yield (component, term) over every row."""
        for component, row in enumerate(self.terms):
            for term in row:
                yield component, term

    @property
    def max_degree(self):
        return max((term.degree for _, term in self.all_terms()), default=0)

    def scaled(self, factor):
        """Copy with every term coefficient multiplied by factor."""
        return self.map_terms(lambda term: term.scaled(factor))

    def map_terms(self, fn):
        terms = tuple(tuple(fn(term) for term in row) for row in self.terms)
        return EquationSpec(
            self.name, self.dimension, self.left, terms, self.notes,
            self.classify_only, self.zero_mode, self.local_form,
        )

    def map_symbols(self, fn):
        """Copy with fn applied to every left, outer and inner symbol."""
        spec = self.map_terms(lambda term: term.map_symbols(fn))
        return replace(spec, left=tuple(fn(p) for p in self.left))

    def to_dict(self):
        data = {
            'name': self.name,
            'dimension': self.dimension,
            'left': [str(p) for p in self.left],
            'terms': [[term.to_dict() for term in row] for row in self.terms],
            'notes': self.notes,
            'classify_only': self.classify_only,
        }
        if self.zero_mode is not ZeroModePolicy.STRICT:
            data['zero_mode'] = self.zero_mode.value
        if self.local_form:
            data['local_form'] = True
        return data

    def __repr__(self):
        return f'<EquationSpec {self.name} dim={self.dimension}>'


@dataclass(frozen=True)
class LocalFluxView:
    """
    The odd part of a scalar equation seen as a local flux derivative (F1(u))_x.

    Attributes:
        present: True when every odd term is coefficient * i*xi * u^n
        coefficients: a_n of F1(u) = sum a_n u^n, indexed by n
        odd_terms: The odd terms the view was assembled from
    """
    present: bool
    coefficients: tuple = ()
    odd_terms: tuple = field(default=(), compare=False)

    @property
    def empty(self):
        return not any(self.coefficients)

    @property
    def polynomial(self):
        return Polynomial(self.coefficients or (0.0,))

    @property
    def is_linear(self):
        """F1 of degree at most one (F1' constant)."""
        return self.polynomial.trim().degree() <= 1

    def flux(self, u):
        return self.polynomial(np.asarray(u))

    def to_dict(self):
        return {
            'present': self.present,
            'empty': self.empty,
            'coefficients': list(self.coefficients),
        }
