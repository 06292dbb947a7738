"""
Exponential integrators for u_t = L u + N(u) with diagonal L.

ETDRK4 evaluates its phi-function coefficients as means over 32 points on a
unit circle around each L*dt, which avoids the cancellation of the closed
forms near L*dt = 0. IFRK4 is classical RK4 on the integrating-factor
variable exp(-L t) u.
"""

import logging

import numpy as np

from symlab.decorators import solver_backed
from symlab.errors import BlowUpError, GridError
from symlab.models.spectral import Scheme, Trajectory
from symlab.solver.rhs import compile_rhs
from symlab.solver.transforms import hermitian_project

logger = logging.getLogger(__name__)

CONTOUR_POINTS = 32
CONTOUR_RADIUS = 1.0
BLOW_UP_FACTOR = 1e8


class ETDRK4:
    """Fourth-order exponential time differencing Runge-Kutta step."""

    def __init__(self, linear, nonlinear, dt):
        self.nonlinear = nonlinear
        self.dt = dt

        z = dt * linear
        self.exp_full = np.exp(z)
        self.exp_half = np.exp(z / 2.0)

        contour = CONTOUR_RADIUS * np.exp(
            2j * np.pi * (np.arange(1, CONTOUR_POINTS + 1) - 0.5) / CONTOUR_POINTS)
        lr = z[..., np.newaxis] + contour
        exp_lr = np.exp(lr)
        lr_cub = lr ** 3

        self.coeff_half = dt * ((np.exp(lr / 2.0) - 1.0) / lr).mean(axis=-1)
        self.coeff_f1 = dt * ((-4.0 - lr + exp_lr * (4.0 - 3.0 * lr + lr ** 2)) / lr_cub).mean(axis=-1)
        self.coeff_f2 = dt * ((2.0 + lr + exp_lr * (lr - 2.0)) / lr_cub).mean(axis=-1)
        self.coeff_f3 = dt * ((-4.0 - 3.0 * lr - lr ** 2 + exp_lr * (4.0 - lr)) / lr_cub).mean(axis=-1)

    def step(self, v):
        n_0 = self.nonlinear(v)
        a = self.exp_half * v + self.coeff_half * n_0
        n_a = self.nonlinear(a)
        b = self.exp_half * v + self.coeff_half * n_a
        n_b = self.nonlinear(b)
        c = self.exp_half * a + self.coeff_half * (2.0 * n_b - n_0)
        n_c = self.nonlinear(c)
        return (self.exp_full * v + self.coeff_f1 * n_0
                + 2.0 * self.coeff_f2 * (n_a + n_b) + self.coeff_f3 * n_c)


class IFRK4:
    """Integrating-factor RK4 step."""

    def __init__(self, linear, nonlinear, dt):
        self.nonlinear = nonlinear
        self.dt = dt
        self.exp_full = np.exp(dt * linear)
        self.exp_half = np.exp(dt * linear / 2.0)

    def step(self, v):
        dt, e, e2 = self.dt, self.exp_full, self.exp_half
        k1 = self.nonlinear(v)
        k2 = self.nonlinear(e2 * (v + 0.5 * dt * k1))
        k3 = self.nonlinear(e2 * v + 0.5 * dt * k2)
        k4 = self.nonlinear(e * v + dt * e2 * k3)
        return e * v + dt / 6.0 * (e * k1 + 2.0 * e2 * (k2 + k3) + k4)


STEPPERS = {Scheme.ETDRK4: ETDRK4, Scheme.IFRK4: IFRK4}


@solver_backed
def integrate(spec, ic, cfg):
    """
    Integrate spec from ic up to cfg.t_end.

    Takes ceil(t_end/dt) steps of equal length landing on t_end, projects onto
    real fields after every step and records a snapshot every
    cfg.snapshot_stride steps and at t_end.

    Raises:
        ClassifyOnlyError: spec is classify_only.
        GridError: ic does not have spec.dimension components.
        BlowUpError: the coefficient norm exceeded 1e8 times its initial
            value, or became non-finite; carries the partial trajectory.
    """
    if ic.dimension != spec.dimension:
        raise GridError(f'{spec.name} has {spec.dimension} components, initial state has {ic.dimension}')

    trajectory = Trajectory(spec.name, [ic], cfg)
    steps = cfg.steps
    if steps == 0:
        return trajectory

    grid = ic.grid
    dt = cfg.effective_dt
    rhs = compile_rhs(spec, grid, cfg.dealias_fraction)
    stepper = STEPPERS[cfg.scheme](rhs.linear, rhs.nonlinear, dt)

    initial_norm = ic.norm()
    limit = BLOW_UP_FACTOR * (initial_norm if initial_norm > 0 else 1.0)
    logger.debug('integrating %s: %d %s steps of %.3g on N=%d',
                 spec.name, steps, cfg.scheme.value, dt, grid.N)

    v = hermitian_project(ic.coeffs, grid)
    for step in range(1, steps + 1):
        v = hermitian_project(stepper.step(v), grid)
        time = cfg.t_end if step == steps else step * dt
        norm = float(np.linalg.norm(v))
        if not np.isfinite(norm) or norm > limit:
            logger.error('%s blew up at t=%.6g (norm %.3g, initial %.3g)',
                         spec.name, time, norm, initial_norm)
            raise BlowUpError(
                f'{spec.name}: coefficient norm exceeded {BLOW_UP_FACTOR:g} times its '
                f'initial value at t={time:.6g}', time, trajectory)
        if step % cfg.snapshot_stride == 0 or step == steps:
            trajectory.append(ic.replace(coeffs=v, time=time))

    logger.debug('integrated %s to t=%.6g, %d snapshots', spec.name, cfg.t_end, len(trajectory))
    return trajectory
