"""Pointwise transform kernel and fractional convolution weight."""

from __future__ import annotations

import numpy as np

from .core import FractionalAngle


def kernel_phase(angle: FractionalAngle, t, u):
    """Real phase ``t**2 cot(phi) / 2 - t u csc(phi)`` of the kernel exponential."""
    t = np.asarray(t, dtype=float)
    u = np.asarray(u, dtype=float)
    return 0.5 * t * t * angle.cot_phi - t * u * angle.csc_phi


def kernel(angle: FractionalAngle, t, u):
    """Reduced-order kernel ``amp_root * exp(j (t^2 cot/2 - t u csc))``.

    The quadratic chirp is attached to the time argument ``t``; ``u`` is the
    fractional frequency. Broadcasts over array inputs.
    """
    return angle.amp_root * np.exp(1j * kernel_phase(angle, t, u))


def convolution_weight(angle: FractionalAngle, tau, t):
    """Weight ``exp(j tau (tau - t) cot(phi))`` of the fractional convolution."""
    tau = np.asarray(tau, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.exp(1j * (tau * (tau - t) * angle.cot_phi))
