"""
Spectral solver package.

Periodic pseudospectral evaluation of pseudo-product right-hand sides and
ETDRK4 / IFRK4 time stepping.
"""

from symlab.solver.integrators import ETDRK4, IFRK4, integrate
from symlab.solver.profiles import kdv_burgers_steady_profile, kdv_soliton_profile
from symlab.solver.rhs import RightHandSide, compile_rhs, eval_rhs
from symlab.solver.transforms import (
    dealias_mask, derivative, hermitian_project, shift, transform_forward,
    transform_inverse, translation_phase,
)

__all__ = [
    'ETDRK4', 'IFRK4', 'integrate', 'kdv_burgers_steady_profile',
    'kdv_soliton_profile', 'RightHandSide', 'compile_rhs', 'eval_rhs',
    'dealias_mask', 'derivative', 'hermitian_project', 'shift',
    'transform_forward', 'transform_inverse', 'translation_phase',
]
