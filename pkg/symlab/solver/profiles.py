"""Exact traveling-wave profiles used as initial conditions and oracles."""

import numpy as np


def _periodic_distance(grid, center):
    return np.mod(grid.x - center + grid.L / 2.0, grid.L) - grid.L / 2.0


def kdv_soliton_profile(grid, speed=1.0, center=None):
    """
    Soliton of u_t + 6 u u_x + u_xxx = 0 travelling right with the given speed:

        u(x) = c/2 sech^2(sqrt(c)/2 (x - center))

    Centered at L/2 by default; the tails are periodised by distance.
    """
    center = grid.L / 2.0 if center is None else center
    d = _periodic_distance(grid, center)
    return 0.5 * speed / np.cosh(0.5 * np.sqrt(speed) * d) ** 2


def kdv_burgers_steady_profile(grid, speed=1.0, center=None):
    """
    Decaying solution of -c u_x = 6 u u_x - u_xxx.

    Integrating once gives u_xx = 3 u^2 + c u, solved by
    u(x) = -c/2 sech^2(sqrt(c)/2 (x - center)); the amplitude is negative.
    """
    return -kdv_soliton_profile(grid, speed, center)
