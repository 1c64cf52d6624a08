"""Forward transform by direct quadrature, the chirp/FFT fast path, and the inverse.

All three use the same discretisation: a trapezoid sum over the sampling
grid (unit weights, half weights on the two end samples). The fast path is
that sum reorganised as chirp pre-multiplication, one FFT and a phase
twiddle, so on its own output bins it agrees with the quadrature to rounding.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import FractionalAngle, SampledSignal, Spectrum, SpectrumFn, UniformGrid
from .exceptions import GridTooCoarse, TruncationWarning

# Elements per exp(...) block in the O(N*M) sums; bounds peak memory.
_BLOCK_ELEMENTS = 1 << 22
_EDGE_RTOL = 1e-8


@dataclass(frozen=True)
class BandwidthReport:
    chirped_bandwidth: float
    nyquist: float
    aliased: bool
    signal_bandwidth: float = 0.0


def _trapezoid_weights(n: int) -> np.ndarray:
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return w


def energy_bandwidth(x: SampledSignal, fraction: float = 0.99) -> float:
    """Smallest ``B`` such that ``|omega| <= B`` holds ``fraction`` of the spectral energy."""
    spec = np.abs(np.fft.fft(x.samples)) ** 2
    total = spec.sum()
    if total == 0.0:
        return 0.0
    omega = np.abs(2.0 * np.pi * np.fft.fftfreq(x.grid.count, d=x.grid.step))
    order = np.argsort(omega, kind="stable")
    cum = np.cumsum(spec[order])
    k = int(np.searchsorted(cum, fraction * total))
    return float(omega[order][min(k, len(order) - 1)])


def bandwidth_report(x: SampledSignal, angle: FractionalAngle) -> BandwidthReport:
    bx = energy_bandwidth(x)
    chirped = bx + abs(angle.cot_phi) * x.grid.span / 2.0
    nyquist = math.pi / x.grid.step
    return BandwidthReport(chirped, nyquist, chirped > nyquist, bx)


def _check_discretisation(x: SampledSignal, angle: FractionalAngle) -> None:
    rep = bandwidth_report(x, angle)
    if rep.aliased:
        warnings.warn(
            f"chirped bandwidth {rep.chirped_bandwidth:.4g} rad/s exceeds Nyquist "
            f"{rep.nyquist:.4g} rad/s at phi={angle.phi:.6g}; refine the time grid",
            GridTooCoarse,
            stacklevel=3,
        )
    _check_edges(x.samples, "signal")


def _check_edges(values: np.ndarray, what: str) -> None:
    peak = np.max(np.abs(values)) if values.size else 0.0
    if peak == 0.0:
        return
    edge = max(abs(values[0]), abs(values[-1]))
    if edge > _EDGE_RTOL * peak:
        warnings.warn(
            f"{what} is not negligible at the grid edges ({edge / peak:.2e} of peak)",
            TruncationWarning,
            stacklevel=4,
        )


def _chirped_samples(x: SampledSignal, angle: FractionalAngle) -> np.ndarray:
    t = x.t
    return _trapezoid_weights(x.grid.count) * x.samples * np.exp(0.5j * angle.cot_phi * t * t)


def rofrft_at(x: SampledSignal, angle: FractionalAngle, u, *, check: bool = True) -> np.ndarray:
    """Quadrature transform of ``x`` at arbitrary fractional frequencies ``u``.

    Cost is O(len(x) * len(u)). Each output point is an independent dot
    product, so results do not depend on how the work is blocked.
    """
    if check:
        _check_discretisation(x, angle)
    u = np.atleast_1d(np.asarray(u, dtype=float))
    t = x.t
    g = _chirped_samples(x, angle)
    out = np.empty(u.shape, dtype=np.complex128)
    flat_u = u.reshape(-1)
    flat_out = out.reshape(-1)
    rows = max(1, _BLOCK_ELEMENTS // t.size)
    scale = angle.amp_root * x.grid.step
    for lo in range(0, flat_u.size, rows):
        block = flat_u[lo:lo + rows]
        phase = np.outer(block * angle.csc_phi, t)
        flat_out[lo:lo + rows] = np.exp(-1j * phase) @ g
    return scale * out


def rofrft_quadrature(x: SampledSignal, angle: FractionalAngle, u_grid: UniformGrid) -> Spectrum:
    """Forward transform on ``u_grid`` by direct trapezoid quadrature (the oracle)."""
    return Spectrum(angle, u_grid, rofrft_at(x, angle, u_grid.points))


def fast_grid(x: SampledSignal, angle: FractionalAngle) -> UniformGrid:
    """Output grid of :func:`rofrft_fast`: centred FFT bins scaled by ``sin(phi)``."""
    n, dt = x.grid.count, x.grid.step
    k = np.fft.fftshift(np.fft.fftfreq(n) * n)
    du = abs(angle.sin_phi) * 2.0 * np.pi / (n * dt)
    kmin = k[0] if angle.sin_phi > 0 else -k[-1]
    return UniformGrid(float(kmin * du), float(du), n)


def rofrft_fast(x: SampledSignal, angle: FractionalAngle) -> Spectrum:
    """Three-step fast transform: chirp multiply, one FFT, amplitude and phase twiddle.

    Output bins are ``u_k = omega_k * sin(phi)`` with ``omega_k`` the centred
    FFT frequencies ``2 pi k / (N dt)``. When ``sin(phi) < 0`` the bins are
    reversed so the returned grid is ascending.
    """
    _check_discretisation(x, angle)
    n, dt, t0 = x.grid.count, x.grid.step, x.grid.start
    g = _chirped_samples(x, angle)
    omega = 2.0 * np.pi * np.fft.fftshift(np.fft.fftfreq(n, d=dt))
    values = angle.amp_root * dt * np.exp(-1j * omega * t0) * np.fft.fftshift(np.fft.fft(g))
    if angle.sin_phi < 0:
        values = values[::-1]
    return Spectrum(angle, fast_grid(x, angle), values)


def inverse_rofrft(X: Spectrum, t_grid: UniformGrid) -> SampledSignal:
    """Invert a spectrum onto ``t_grid`` by quadrature of the inversion integral.

    ``x(t) = exp(-j t^2 cot/2) |csc| / (2 pi amp_root) * integral X(u) exp(j t u csc) du``
    """
    angle = X.angle
    _check_edges(X.values, "spectrum")
    u = X.u
    t = t_grid.points
    h = _trapezoid_weights(X.grid.count) * X.values
    acc = np.empty(t.size, dtype=np.complex128)
    rows = max(1, _BLOCK_ELEMENTS // u.size)
    for lo in range(0, t.size, rows):
        block = t[lo:lo + rows]
        acc[lo:lo + rows] = np.exp(1j * np.outer(block * angle.csc_phi, u)) @ h
    scale = abs(angle.csc_phi) * X.grid.step / (2.0 * np.pi * angle.amp_root)
    samples = scale * np.exp(-0.5j * angle.cot_phi * t * t) * acc
    return SampledSignal(t_grid, samples)


def quadrature_spectrum_fn(x: SampledSignal, angle: FractionalAngle) -> SpectrumFn:
    """Spectrum of sampled ``x`` as a function, evaluated on demand by quadrature."""

    def value(u):
        u = np.asarray(u, dtype=float)
        return rofrft_at(x, angle, u.reshape(-1), check=False).reshape(u.shape)

    return SpectrumFn(value, angle, rebind=lambda other: quadrature_spectrum_fn(x, other))
