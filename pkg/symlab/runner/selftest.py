"""
Embedded property suite run by ``symlab selftest``.

Each check is registered with @selfcheck and returns (passed, detail). The
random inputs are drawn from a fixed seed so a build either always passes or
always fails.
"""

import logging
from dataclasses import dataclass
from functools import wraps

import numpy as np

from symlab.analysis import reflect
from symlab.equations import get_equation
from symlab.models import (
    EquationSpec, Factor, Grid, IntegratorConfig, Parity, PseudoProductTerm, SpectralState,
)
from symlab.models.symbol import (
    I, ONE, XI, Abs, Add, Const, Cos, Div, Exp, Mul, Neg, Pow, Sech, Sign, Sin, Sqrt,
    Sub, Tanh,
)
from symlab.solver import eval_rhs, integrate, transform_forward
from symlab.symbols import evaluate_masked, parity_symbolic

logger = logging.getLogger(__name__)

SEED = 20240607
CHECKS = []


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def selfcheck(name):
    """Register a check under name; exceptions count as failures."""
    def decorator(f):
        @wraps(f)
        def decorated_function(rng):
            try:
                passed, detail = f(rng)
            except Exception as exc:
                logger.exception('self-check %s raised', name)
                return CheckResult(name, False, f'{type(exc).__name__}: {exc}')
            return CheckResult(name, bool(passed), detail)
        CHECKS.append(decorated_function)
        return decorated_function
    return decorator


def random_band_limited(grid, rng, band=5, dimension=1):
    """Real state with modes |k| <= band and a zero Nyquist mode."""
    coeffs = np.zeros((dimension, grid.N), dtype=np.complex128)
    for c in range(dimension):
        values = rng.normal(size=band + 1) + 1j * rng.normal(size=band + 1)
        values[0] = values[0].real
        coeffs[c, :band + 1] = values
        coeffs[c, grid.N - band:] = np.conj(values[1:][::-1])
    return SpectralState(grid, 0.0, coeffs)


_UNARY = (Abs, Sqrt, Exp, Tanh, Sech, Sign, Cos, Sin, Neg)
_BINARY = (Add, Sub, Mul, Div)


def random_symbol(rng, depth=4):
    """Random symbol tree over xi with real constants and the imaginary unit."""
    if depth == 0 or rng.random() < 0.25:
        choice = rng.integers(3)
        if choice == 0:
            return XI
        if choice == 1:
            return Const(round(float(rng.uniform(-2.0, 2.0)), 3))
        return I
    kind = rng.integers(3)
    if kind == 0:
        return _UNARY[rng.integers(len(_UNARY))](random_symbol(rng, depth - 1))
    if kind == 1:
        return Pow(random_symbol(rng, depth - 1), int(rng.integers(1, 4)))
    op = _BINARY[rng.integers(len(_BINARY))]
    return op(random_symbol(rng, depth - 1), random_symbol(rng, depth - 1))


@selfcheck('parity soundness')
def check_parity_soundness(rng, trees=300):
    xi = np.linspace(0.05, 6.0, 120)
    checked = 0
    for _ in range(trees):
        expr = random_symbol(rng)
        parity = parity_symbolic(expr)
        if not parity.is_definite:
            continue
        plus, pole_p, over_p = evaluate_masked(expr, xi)
        minus, pole_m, over_m = evaluate_masked(expr, -xi)
        usable = ~(pole_p | pole_m | over_p | over_m)
        sign = 1.0 if parity is Parity.EVEN else -1.0
        error = np.abs(minus[usable] - sign * plus[usable])
        scale = 1.0 + np.abs(plus[usable])
        if np.any(error > 1e-9 * scale):
            return False, f'{expr} claimed {parity.value}'
        checked += 1
    return True, f'{checked} definite trees agree with sampling'


@selfcheck('convolution oracle (N=32)')
def check_convolution_oracle(rng, states=50):
    grid = Grid(32, 2.0 * np.pi)
    square = EquationSpec(
        name='square', dimension=1, left=(ONE,),
        terms=((PseudoProductTerm(1.0, ONE, (Factor(ONE, 0), Factor(ONE, 0))),),),
    )
    modes = grid.modes
    worst = 0.0
    for _ in range(states):
        state = random_band_limited(grid, rng)
        u = state.coeffs[0]
        direct = np.zeros(grid.N, dtype=np.complex128)
        for p in np.flatnonzero(u):
            for q in np.flatnonzero(u):
                direct[(modes[p] + modes[q]) % grid.N] += u[p] * u[q]
        direct /= np.sqrt(grid.N)
        spectral = eval_rhs(square, state, dealias_fraction=1.0)[0]
        worst = max(worst, float(np.max(np.abs(spectral - direct))))
    return worst < 1e-12, f'max error {worst:.2e}'


@selfcheck('reflection involution')
def check_reflection_involution(rng, states=20):
    grid = Grid(64, 40.0)
    worst = 0.0
    for _ in range(states):
        state = random_band_limited(grid, rng, band=20, dimension=2)
        lam = float(rng.uniform(0.0, grid.L))
        twice = reflect(reflect(state, lam), lam)
        worst = max(worst, float(np.max(np.abs(twice.coeffs - state.coeffs))))
    return worst < 1e-13, f'max error {worst:.2e}'


@selfcheck('linear heat flow exactness')
def check_heat_flow(rng):
    grid = Grid(32, 2.0 * np.pi)
    x = grid.x
    amplitudes = rng.normal(size=3)
    values = amplitudes[0] + amplitudes[1] * np.cos(x) + amplitudes[2] * np.sin(3.0 * x)
    ic = transform_forward(values, grid)
    trajectory = integrate(get_equation('heat'), ic, IntegratorConfig(dt=0.01, t_end=1.0))
    exact = ic.coeffs * np.exp(-grid.wavenumbers ** 2 * 1.0)
    error = float(np.max(np.abs(trajectory[-1].coeffs - exact)))
    return error < 1e-10, f'error at t=1 {error:.2e}'


def run_selftest(seed=SEED):
    """Run every registered check with its own generator from seed."""
    results = [check(np.random.default_rng([seed, index])) for index, check in enumerate(CHECKS)]
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning('self-test failures: %s', ', '.join(failed))
    return results
