"""Independent numerical oracles for closed forms that are not plain integrals.

Non-integrable families (constants, complex exponentials, chirps) have
transforms only as limits. The oracle multiplies the signal by
``exp(-eps t^2 / 2)``, evaluates the now-convergent integral by trapezoid
quadrature, and extrapolates the result to ``eps = 0`` through a polynomial
in ``eps``.
"""

from __future__ import annotations

import math

import numpy as np

from .catalog import LinearChirp, SignalFamily, TTimesExp, ComplexExp, eval_time
from .core import FractionalAngle, SampledSignal, UniformGrid
from .transform import rofrft_at

DEFAULT_EPSILONS = (1e-2, 1e-3, 1e-4)
# exp(-eps T^2 / 2) at the truncation point
_DECAY_EXPONENT = 40.0


def _frequency_bound(family: SignalFamily, angle: FractionalAngle, half_width: float, u_max: float) -> float:
    rate = abs(angle.cot_phi)
    if isinstance(family, LinearChirp):
        rate += abs(family.rate_a)
    shift = abs(u_max * angle.csc_phi)
    if isinstance(family, (ComplexExp, TTimesExp)):
        shift += abs(family.q)
    return rate * half_width + shift + 1.0


def regularized_grid(family: SignalFamily, angle: FractionalAngle, eps: float, u_max: float) -> UniformGrid:
    """Sampling grid that resolves the regularised integrand to double precision."""
    half = math.sqrt(2.0 * _DECAY_EXPONENT / eps)
    # half the step that would alias the envelope's spectrum at exp(-40)
    dt = math.pi / _frequency_bound(family, angle, half, u_max)
    n = 2 * int(math.ceil(half / dt)) + 1
    return UniformGrid(-dt * (n // 2), dt, n)


def regularized_values(family: SignalFamily, angle: FractionalAngle, u, eps: float) -> np.ndarray:
    u = np.atleast_1d(np.asarray(u, dtype=float))
    grid = regularized_grid(family, angle, eps, float(np.max(np.abs(u))))
    t = grid.points
    x = SampledSignal(grid, eval_time(family, t) * np.exp(-0.5 * eps * t * t))
    return rofrft_at(x, angle, u, check=False)


def extrapolate_to_zero(eps, values) -> np.ndarray:
    """Lagrange extrapolation of ``values(eps)`` to ``eps = 0``."""
    eps = np.asarray(eps, dtype=float)
    out = 0.0
    for i, vi in enumerate(values):
        w = 1.0
        for j in range(len(eps)):
            if j != i:
                w *= eps[j] / (eps[j] - eps[i])
        out = out + w * np.asarray(vi)
    return out


def regularized_rofrft(family: SignalFamily, angle: FractionalAngle, u, epsilons=DEFAULT_EPSILONS):
    """Limit of the Gaussian-regularised transform as ``eps -> 0``.

    Returns ``(extrapolated, per_eps)`` where ``per_eps`` maps each ``eps`` to
    its raw regularised values.
    """
    per_eps = {eps: regularized_values(family, angle, u, eps) for eps in epsilons}
    return extrapolate_to_zero(list(per_eps), list(per_eps.values())), per_eps
