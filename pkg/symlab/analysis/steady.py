"""
Steady sub-equation of mixed-parity equations.

A snapshot symmetric about an axis moving with velocity c satisfies

    -c P(D) u_x = F_odd(D, u)

where F_odd collects the terms whose parity differs from that of P.
"""

import numpy as np

from symlab.equations.structure import symbol_parity, term_parity
from symlab.solver.rhs import compile_rhs
from symlab.symbols import evaluate_symbol_array

SMALL = 1e-300


def _steady_parts(spec, state):
    """(P i xi u, F_odd(u)) as coefficient arrays of shape (dim, N)."""
    grid = state.grid
    rhs = compile_rhs(spec, grid)
    transport = np.empty_like(state.coeffs)
    forcing = np.zeros_like(state.coeffs)
    for component in range(spec.dimension):
        left = symbol_parity(spec.left[component])
        indices = [
            index for index, term in enumerate(spec.terms[component])
            if term_parity(term) is not left
        ]
        left_values = evaluate_symbol_array(spec.left[component], grid.wavenumbers)
        transport[component] = left_values * 1j * grid.wavenumbers * state.coeffs[component]
        forcing[component] = rhs.term_values(state.coeffs, component, indices)
    return transport, forcing


def steady_subequation_residual(spec, state, speed):
    """||c P u_x + F_odd(u)|| / ||F_odd(u)|| (0 when both vanish)."""
    transport, forcing = _steady_parts(spec, state)
    scale = float(np.linalg.norm(forcing))
    error = float(np.linalg.norm(speed * transport + forcing))
    if scale < SMALL:
        return 0.0 if error < SMALL else float('inf')
    return error / scale


def instantaneous_speed(spec, state):
    """Speed c minimising ||c P u_x + F_odd(u)|| (0 for a flat state)."""
    transport, forcing = _steady_parts(spec, state)
    weight = float(np.vdot(transport, transport).real)
    if weight < SMALL:
        return 0.0
    return float(-np.vdot(transport, forcing).real / weight)
