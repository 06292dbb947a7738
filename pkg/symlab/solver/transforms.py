"""Transforms between physical values and Fourier coefficients, plus phase operations."""

import numpy as np

from symlab.errors import GridError
from symlab.extensions import fft
from symlab.models.spectral import SpectralState


def _as_rows(values, grid):
    values = np.asarray(values)
    if values.ndim == 1:
        values = values[np.newaxis, :]
    if values.ndim != 2 or values.shape[1] != grid.N:
        raise GridError(f'array of shape {np.shape(values)} does not match N={grid.N}')
    return values


def transform_forward(values, grid, time=0.0):
    """Coefficients of real values given per component (shape (N,) or (dim, N))."""
    values = _as_rows(values, grid)
    if np.iscomplexobj(values):
        if np.any(values.imag):
            raise GridError('physical values must be real')
        values = values.real
    return SpectralState(grid, time, fft.forward(values.astype(np.float64)))


def transform_inverse(state):
    """Physical values of every component, shape (dim, N)."""
    return fft.inverse(state.coeffs).real


def to_physical(coeffs):
    return fft.inverse(coeffs)


def to_spectral(values):
    return fft.forward(values)


def hermitian_project(coeffs, grid):
    """Closest coefficients of a real field with the Nyquist mode removed."""
    coeffs = np.asarray(coeffs)
    projected = 0.5 * (coeffs + np.conj(coeffs[..., grid.mirror_index()]))
    projected[..., grid.nyquist] = 0.0
    return projected


def dealias_mask(grid, fraction):
    """True for the modes kept around products: |k| <= fraction * N/2."""
    return np.abs(grid.modes) <= fraction * grid.N / 2


def shift(state, s):
    """State of x -> u(x - s)."""
    return state.replace(coeffs=state.coeffs * translation_phase(state.grid, s))


def translation_phase(grid, s):
    """exp(-i xi_k s), with the turns reduced mod 1 so that s = L is exact."""
    turns = np.mod(grid.modes * (s / grid.L), 1.0)
    return np.exp(-2j * np.pi * turns)


def derivative(state, order=1):
    """Coefficients of the order-th x-derivative."""
    return state.coeffs * (1j * state.grid.wavenumbers) ** order
