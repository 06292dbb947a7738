"""Reflection about an axis and the symmetry defect."""

import numpy as np

from symlab.solver.transforms import translation_phase


def reflected_coeffs(state, lam):
    """v_k = exp(-2 i lam xi_k) u_{-k} per component; the Nyquist mode is dropped."""
    grid = state.grid
    coeffs = state.coeffs[:, grid.mirror_index()] * translation_phase(grid, 2.0 * lam)
    coeffs[:, grid.nyquist] = 0.0
    return coeffs


def reflect(state, lam):
    """State of x -> u(2 lam - x)."""
    return state.replace(coeffs=reflected_coeffs(state, lam))


def symmetry_defect(state, lam):
    """
    ||u - reflect(u, lam)|| / ||u|| over all components (0 for the zero state).

    All components are reflected about the same axis.
    """
    norm = state.norm()
    if norm == 0:
        return 0.0
    return float(np.linalg.norm(state.coeffs - reflected_coeffs(state, lam)) / norm)


def defect_scan(state, candidates):
    """Squared defect at every candidate axis, vectorised over candidates."""
    grid = state.grid
    norm_sq = float(np.sum(np.abs(state.coeffs) ** 2))
    if norm_sq == 0:
        return np.zeros(len(candidates))
    turns = np.mod(np.outer(2.0 * np.asarray(candidates) / grid.L, grid.modes), 1.0)
    phases = np.exp(-2j * np.pi * turns)
    phases[:, grid.nyquist] = 0.0
    mirrored = state.coeffs[:, grid.mirror_index()]
    total = np.zeros(len(candidates))
    for u, m in zip(state.coeffs, mirrored):
        total += np.sum(np.abs(u[np.newaxis, :] - phases * m[np.newaxis, :]) ** 2, axis=1)
    return total / norm_sq
