"""
Spectral model: periodic grids, coefficient states and trajectories.

Coefficients are stored in FFT order (k = 0 .. N/2-1, -N/2 .. -1) with the
unitary normalisation, one row per component.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from symlab.errors import GridError

MIN_POINTS = 16


@dataclass(frozen=True)
class Grid:
    """
    Periodic grid on [0, L).

    Attributes:
        N: Number of points, a power of two >= 16
        L: Period length
        modes: Integer mode numbers k in FFT order
        wavenumbers: xi_k = 2 pi k / L in FFT order
        x: Physical points x_n = n L / N
    """
    N: int
    L: float
    modes: np.ndarray = field(init=False, repr=False, compare=False)
    wavenumbers: np.ndarray = field(init=False, repr=False, compare=False)
    x: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.N, (int, np.integer)) or isinstance(self.N, bool):
            raise GridError(f'N must be an integer, got {self.N!r}')
        if self.N < MIN_POINTS or self.N & (self.N - 1):
            raise GridError(f'N must be a power of two >= {MIN_POINTS}, got {self.N}')
        if not (math.isfinite(self.L) and self.L > 0):
            raise GridError(f'L must be positive and finite, got {self.L}')

        modes = np.fft.fftfreq(self.N, d=1.0 / self.N).astype(np.int64)
        wavenumbers = 2.0 * np.pi * modes / self.L
        x = np.arange(self.N) * (self.L / self.N)
        for name, value in (('modes', modes), ('wavenumbers', wavenumbers), ('x', x)):
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def nyquist(self):
        """Index of the k = -N/2 mode."""
        return self.N // 2

    @property
    def spacing(self):
        return self.L / self.N

    def mirror_index(self):
        """Index of -k for every storage index."""
        return (-np.arange(self.N)) % self.N

    def to_dict(self):
        return {'N': int(self.N), 'L': float(self.L)}


@dataclass(frozen=True)
class SpectralState:
    """
    Fourier coefficients of a (vector) field at one time.

    Attributes:
        grid: The Grid the coefficients live on
        time: Simulation time
        coeffs: Complex array of shape (dimension, N), read-only
    """
    grid: Grid
    time: float
    coeffs: np.ndarray = field(compare=False)

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128)
        if coeffs.ndim == 1:
            coeffs = coeffs[np.newaxis, :]
        if coeffs.ndim != 2 or coeffs.shape[1] != self.grid.N:
            raise GridError(
                f'coefficient array of shape {coeffs.shape} does not match N={self.grid.N}')
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, 'time', float(self.time))

    @property
    def dimension(self):
        return self.coeffs.shape[0]

    def norm(self):
        """Combined L2 norm of all components."""
        return float(np.linalg.norm(self.coeffs))

    def replace(self, coeffs=None, time=None):
        return SpectralState(
            self.grid,
            self.time if time is None else time,
            self.coeffs if coeffs is None else coeffs,
        )

    def hermitian_residual(self):
        """max |u_{-k} - conj(u_k)| relative to the largest coefficient."""
        mirrored = self.coeffs[:, self.grid.mirror_index()]
        scale = max(float(np.max(np.abs(self.coeffs), initial=0.0)), np.finfo(float).tiny)
        return float(np.max(np.abs(mirrored - np.conj(self.coeffs)))) / scale


class Scheme(Enum):
    """Time-stepping schemes."""
    ETDRK4 = 'ETDRK4'
    IFRK4 = 'IFRK4'


@dataclass(frozen=True)
class IntegratorConfig:
    """
    Integrator settings.

    Attributes:
        dt: Requested step; the effective step divides t_end exactly
        t_end: Final time (>= 0)
        snapshot_stride: Record every this many steps (t_end always recorded)
        dealias_fraction: Keep modes with |k| <= fraction * N/2 around products
        scheme: Scheme.ETDRK4 or Scheme.IFRK4
    """
    dt: float
    t_end: float
    snapshot_stride: int = 1
    dealias_fraction: float = 2.0 / 3.0
    scheme: Scheme = Scheme.ETDRK4

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f'dt must be positive, got {self.dt}')
        if self.t_end < 0:
            raise ValueError(f't_end must be nonnegative, got {self.t_end}')
        if self.t_end > 0 and self.dt > self.t_end:
            raise ValueError(f'dt={self.dt} exceeds t_end={self.t_end}')
        if int(self.snapshot_stride) < 1:
            raise ValueError(f'snapshot_stride must be >= 1, got {self.snapshot_stride}')
        if not 0 < self.dealias_fraction <= 1:
            raise ValueError(f'dealias_fraction must lie in (0, 1], got {self.dealias_fraction}')
        if not isinstance(self.scheme, Scheme):
            object.__setattr__(self, 'scheme', Scheme(self.scheme))

    @property
    def steps(self):
        """Number of steps landing exactly on t_end."""
        if self.t_end == 0:
            return 0
        return max(1, math.ceil(self.t_end / self.dt - 1e-9))

    @property
    def effective_dt(self):
        return self.t_end / self.steps if self.steps else 0.0

    def to_dict(self):
        return {
            'dt': self.dt,
            't_end': self.t_end,
            'snapshot_stride': int(self.snapshot_stride),
            'dealias_fraction': self.dealias_fraction,
            'scheme': self.scheme.value,
        }


@dataclass
class Trajectory:
    """Ordered snapshots of one integration."""
    equation: str
    snapshots: list = field(default_factory=list)
    config: IntegratorConfig = None

    def __len__(self):
        return len(self.snapshots)

    def __iter__(self):
        return iter(self.snapshots)

    def __getitem__(self, index):
        return self.snapshots[index]

    @property
    def grid(self):
        return self.snapshots[0].grid

    @property
    def dimension(self):
        return self.snapshots[0].dimension

    @property
    def times(self):
        return np.array([s.time for s in self.snapshots])

    def append(self, state):
        self.snapshots.append(state)
