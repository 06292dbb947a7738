"""
Pseudospectral right-hand side of P(D) u_t = F(D, u).

Every symbol is evaluated once on the grid frequencies. Linear terms act
diagonally on the coefficients; products apply the inner symbols, go to
physical space, multiply pointwise and come back, with the 2/3-rule mask
applied before and after the multiplication.
"""

import logging
from functools import lru_cache

import numpy as np

from symlab.models.equation import ZeroModePolicy
from symlab.solver.transforms import dealias_mask, to_physical, to_spectral
from symlab.symbols import evaluate_symbol_array

logger = logging.getLogger(__name__)


class _CompiledTerm:
    """A term with its symbols sampled on the grid."""

    def __init__(self, term, xi):
        self.degree = term.degree
        self.components = term.components
        self.outer = term.coefficient * evaluate_symbol_array(term.outer, xi)
        self.inners = [evaluate_symbol_array(f.inner, xi) for f in term.factors]

    def symbol(self):
        """coefficient * h * g of a linear term."""
        return self.outer * self.inners[0]


class RightHandSide:
    """
    Compiled right-hand side for one equation on one grid.

    Attributes:
        linear: Diagonal part (dim, N): degree-1 terms acting on their own
            component, divided by P
        inverse_left: 1/P per component (zero at xi = 0 when exempted)
    """

    def __init__(self, spec, grid, dealias_fraction=2.0 / 3.0):
        self.spec = spec
        self.grid = grid
        self.mask = dealias_mask(grid, dealias_fraction)
        xi = grid.wavenumbers

        self.inverse_left = np.empty((spec.dimension, grid.N), dtype=np.complex128)
        for component, left in enumerate(spec.left):
            if spec.zero_mode is ZeroModePolicy.EXEMPT:
                values = evaluate_symbol_array(left, np.where(xi == 0, 1.0, xi))
                values[xi == 0] = np.inf
            else:
                values = evaluate_symbol_array(left, xi)
            self.inverse_left[component] = 1.0 / values

        self.linear = np.zeros((spec.dimension, grid.N), dtype=np.complex128)
        self.terms = []
        self.remainder = []
        for component, row in enumerate(spec.terms):
            compiled_row, remainder_row = [], []
            for term in row:
                compiled = _CompiledTerm(term, xi)
                compiled_row.append(compiled)
                if compiled.degree == 1 and compiled.components[0] == component:
                    self.linear[component] += compiled.symbol() * self.inverse_left[component]
                else:
                    remainder_row.append(compiled)
            self.terms.append(compiled_row)
            self.remainder.append(remainder_row)
        logger.debug('compiled right-hand side of %s on N=%d', spec.name, grid.N)

    def _apply(self, term, coeffs):
        if term.degree == 1:
            return term.outer * term.inners[0] * coeffs[term.components[0]]
        product = None
        for inner, component in zip(term.inners, term.components):
            field = to_physical(inner * coeffs[component] * self.mask)
            product = field if product is None else product * field
        return term.outer * (to_spectral(product) * self.mask)

    def _sum(self, rows, coeffs):
        out = np.zeros((self.spec.dimension, self.grid.N), dtype=np.complex128)
        for component, row in enumerate(rows):
            for term in row:
                out[component] += self._apply(term, coeffs)
        return out * self.inverse_left

    def __call__(self, coeffs):
        """Full time derivative of the coefficients."""
        return self._sum(self.terms, coeffs)

    def nonlinear(self, coeffs):
        """Everything but the diagonal linear part."""
        return self._sum(self.remainder, coeffs)

    def term_values(self, coeffs, component, indices):
        """Sum of the selected terms of one row, before division by P."""
        out = np.zeros(self.grid.N, dtype=np.complex128)
        for index in indices:
            out += self._apply(self.terms[component][index], coeffs)
        return out


@lru_cache(maxsize=32)
def compile_rhs(spec, grid, dealias_fraction=2.0 / 3.0):
    """Cached RightHandSide for (spec, grid, dealias_fraction)."""
    return RightHandSide(spec, grid, dealias_fraction)


def eval_rhs(spec, state, dealias_fraction=2.0 / 3.0):
    """Time derivative of the coefficients of state under spec."""
    return compile_rhs(spec, state.grid, dealias_fraction)(state.coeffs)
