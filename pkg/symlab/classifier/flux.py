"""Invertibility of F1' for the local-flux principle."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

SAMPLE_POINTS = 1024


@dataclass(frozen=True)
class FluxCheck:
    """Outcome of check_flux_invertibility; witness is a point where F1'' vanishes."""
    invertible: bool
    witness: Optional[float] = None
    lo: float = 0.0
    hi: float = 0.0

    def __bool__(self):
        return self.invertible

    def to_dict(self):
        return {
            'invertible': self.invertible,
            'witness': self.witness,
            'range': [self.lo, self.hi],
        }


def check_flux_invertibility(flux, range_lo, range_hi):
    """
    True iff F1'' has neither a zero nor a sign change on [range_lo, range_hi].

    F1'' is sampled at 1024 equispaced points and both endpoints. The test is
    conservative: F1' = u^3 is injective but F1'' = 6u vanishes at 0, so it is
    rejected.
    """
    if not flux.present:
        raise ValueError('flux view is absent')
    lo, hi = float(range_lo), float(range_hi)
    if lo > hi:
        raise ValueError(f'empty range [{lo}, {hi}]')

    second = flux.polynomial.deriv(2)
    u = np.unique(np.concatenate([np.linspace(lo, hi, SAMPLE_POINTS), [lo, hi]]))
    values = second(u)

    zeros = np.flatnonzero(values == 0)
    if zeros.size:
        return FluxCheck(False, float(u[zeros[0]]), lo, hi)

    signs = np.sign(values)
    changes = np.flatnonzero(signs[:-1] != signs[1:])
    if changes.size:
        i = changes[0]
        # Linear interpolation of the root between the two samples.
        witness = u[i] - values[i] * (u[i + 1] - u[i]) / (values[i + 1] - values[i])
        return FluxCheck(False, float(witness), lo, hi)
    return FluxCheck(True, None, lo, hi)
