"""Shared fixtures: the application, its CLI runner and small grids and states."""

import numpy as np
import pytest

from symlab import create_app
from symlab.models import Grid, SpectralState
from symlab.solver import shift


@pytest.fixture
def app(monkeypatch):
    monkeypatch.delenv('SYMLAB_OUTPUT', raising=False)
    return create_app('testing')


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def band_limited_state(grid, rng, band=5, dimension=1):
    """Random real state with modes |k| <= band."""
    coeffs = np.zeros((dimension, grid.N), dtype=np.complex128)
    for c in range(dimension):
        values = rng.normal(size=band + 1) + 1j * rng.normal(size=band + 1)
        values[0] = values[0].real
        coeffs[c, :band + 1] = values
        coeffs[c, grid.N - band:] = np.conj(values[1:][::-1])
    return SpectralState(grid, 0.0, coeffs)


def symmetric_state(grid, rng, axis, band=6, dimension=1):
    """Random real state symmetric about axis: an even cosine series shifted to axis."""
    coeffs = np.zeros((dimension, grid.N), dtype=np.complex128)
    for c in range(dimension):
        values = rng.normal(size=band + 1)
        coeffs[c, :band + 1] = values
        coeffs[c, grid.N - band:] = values[1:][::-1]
    return shift(SpectralState(grid, 0.0, coeffs), axis)


@pytest.fixture
def small_grid():
    return Grid(32, 2.0 * np.pi)
