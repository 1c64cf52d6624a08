import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _oracles import brute_force_dft, conventional_frft, rel_err
from rofrft import (
    Gaussian, GridTooCoarse, SampledSignal, Spectrum, TruncationWarning, analytic_rofrft, bandwidth_report,
    grid_from_range, inverse_rofrft, make_angle, rofrft_at, rofrft_fast, rofrft_quadrature,
)
from rofrft.transform import energy_bandwidth, fast_grid

T_GRID = grid_from_range(-20, 20, 4096)


def gaussian(grid=T_GRID, shift=0.0, chirp=0.0):
    return SampledSignal.from_function(lambda t: np.exp(-0.5 * (t - shift) ** 2 + 0.5j * chirp * t * t), grid)


def test_gaussian_at_right_angle_origin():
    X = rofrft_quadrature(gaussian(), make_angle(math.pi / 2), grid_from_range(-1, 1, 3))
    assert abs(X.values[1] - math.sqrt(2 * math.pi)) <= 1e-8 * math.sqrt(2 * math.pi)


@pytest.mark.parametrize("phi", [0.4, math.pi / 3, 2.5])
def test_zero_signal(phi):
    x = SampledSignal(T_GRID, np.zeros(T_GRID.count))
    assert not np.any(rofrft_quadrature(x, make_angle(phi), grid_from_range(-3, 3, 11)).values)
    assert not np.any(rofrft_fast(x, make_angle(phi)).values)


def test_quadrature_matches_closed_form(std_angle):
    u = np.linspace(-4, 4, 81)
    assert rel_err(rofrft_at(gaussian(), std_angle, u), analytic_rofrft(Gaussian(), std_angle, u).value) <= 1e-6


def test_fast_matches_closed_form():
    a = make_angle(math.pi / 3)
    X = rofrft_fast(gaussian(), a)
    keep = np.abs(X.u) <= 4
    ref = analytic_rofrft(Gaussian(), a, X.u[keep]).value
    assert rel_err(X.values[keep], ref) <= 1e-6


@pytest.mark.parametrize("phi", [math.pi / 6, math.pi / 3, 2.0, -1.0, -2.6])
def test_fast_agrees_with_quadrature(phi):
    a = make_angle(phi)
    x = gaussian(shift=0.7, chirp=0.3)
    X = rofrft_fast(x, a)
    assert np.all(np.diff(X.u) > 0)
    Q = rofrft_at(x, a, X.u)
    assert np.max(np.abs(X.values - Q)) <= 1e-9 * np.max(np.abs(Q))


def test_fast_grid_layout():
    a = make_angle(math.pi / 4)
    g = fast_grid(gaussian(), a)
    n, dt = T_GRID.count, T_GRID.step
    assert g.count == n
    assert g.step == pytest.approx(a.sin_phi * 2 * math.pi / (n * dt))
    assert g.start == pytest.approx(-n // 2 * g.step)


def test_right_angle_is_unnormalised_fourier_transform():
    x = gaussian(shift=0.3)
    a = make_angle(math.pi / 2)
    X = rofrft_fast(x, a)
    omega, ref = brute_force_dft(x.samples, T_GRID.step, T_GRID.start)
    assert np.allclose(X.u, omega, rtol=0, atol=1e-12)
    assert rel_err(X.values, ref) <= 1e-10
    assert rel_err(rofrft_at(x, a, omega), ref) <= 1e-10


@settings(max_examples=25, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 2.9))
def test_linearity(alpha, beta, phi):
    a = make_angle(phi)
    x, y = gaussian(shift=0.5), gaussian(shift=-1.0, chirp=0.2)
    z = SampledSignal(T_GRID, alpha * x.samples + beta * y.samples)
    u = np.linspace(-3, 3, 13)
    lhs = rofrft_at(z, a, u)
    rhs = alpha * rofrft_at(x, a, u) + beta * rofrft_at(y, a, u)
    scale = max(np.max(np.abs(rhs)), 1e-300)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * scale + 1e-13 * (abs(alpha) + abs(beta))
    lf = rofrft_fast(z, a).values
    rf = alpha * rofrft_fast(x, a).values + beta * rofrft_fast(y, a).values
    assert np.max(np.abs(lf - rf)) <= 1e-12 * max(np.max(np.abs(rf)), 1e-300) + 1e-13 * (abs(alpha) + abs(beta))


def test_relation_to_conventional_frft(std_angle):
    x = gaussian(shift=0.5)
    u = np.linspace(-3, 3, 25)
    conv = conventional_frft(x.samples, T_GRID.points, std_angle.phi, u)
    expected = math.sqrt(2 * math.pi) * np.exp(-0.5j * u * u * std_angle.cot_phi) * conv
    assert rel_err(rofrft_at(x, std_angle, u), expected) <= 1e-8


@pytest.mark.parametrize("phi", [math.pi / 4, 2 * math.pi / 5, 3 * math.pi / 4, -math.pi / 3])
def test_round_trip(phi):
    a = make_angle(phi)
    x = gaussian()
    X = rofrft_quadrature(x, a, grid_from_range(-8, 8, 4096))
    back = inverse_rofrft(X, T_GRID)
    assert np.linalg.norm(back.samples - x.samples) / np.linalg.norm(x.samples) <= 1e-6


def test_inverse_at_right_angle_is_inverse_fourier():
    a = make_angle(math.pi / 2)
    w = grid_from_range(-10, 10, 2001)
    X_vals = np.sqrt(2 * np.pi) * np.exp(-0.5 * w.points ** 2)
    x = inverse_rofrft(Spectrum(a, w, X_vals), grid_from_range(-3, 3, 7))
    assert rel_err(x.samples, np.exp(-0.5 * np.linspace(-3, 3, 7) ** 2)) <= 1e-10


def test_inverse_of_zero():
    a = make_angle(1.0)
    X = Spectrum(a, grid_from_range(-4, 4, 64), np.zeros(64))
    assert not np.any(inverse_rofrft(X, grid_from_range(-1, 1, 9)).samples)


def test_bandwidth_report():
    x = gaussian()
    rep = bandwidth_report(x, make_angle(math.pi / 2))
    assert not rep.aliased
    assert rep.aliased == (rep.chirped_bandwidth > rep.nyquist)
    assert rep.nyquist == pytest.approx(math.pi / T_GRID.step)
    assert bandwidth_report(x, make_angle(0.01)).aliased
    zero = SampledSignal(T_GRID, np.zeros(T_GRID.count))
    rep0 = bandwidth_report(zero, make_angle(1.0))
    assert rep0.signal_bandwidth == 0.0
    assert rep0.chirped_bandwidth == pytest.approx(abs(make_angle(1.0).cot_phi) * T_GRID.span / 2)


def test_energy_bandwidth_of_gaussian():
    # |X(w)|^2 ~ exp(-w^2): 99% of the energy lies within erfinv(0.99) ~ 1.8214,
    # rounded up to the next FFT bin
    bin_width = 2 * math.pi / (T_GRID.count * T_GRID.step)
    assert 1.8214 <= energy_bandwidth(gaussian()) <= 1.8214 + bin_width


def test_coarse_grid_warns():
    with pytest.warns(GridTooCoarse):
        rofrft_fast(gaussian(), make_angle(0.01))


def test_truncated_signal_warns():
    x = SampledSignal.from_function(lambda t: np.exp(-0.5 * t * t), grid_from_range(-2, 2, 256))
    with pytest.warns(TruncationWarning):
        rofrft_at(x, make_angle(1.0), [0.0])


def test_well_resolved_signal_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        rofrft_fast(gaussian(), make_angle(1.0))


def test_block_size_does_not_change_results(monkeypatch):
    import rofrft.transform as tr
    x = gaussian(shift=0.2)
    a = make_angle(0.9)
    u = np.linspace(-4, 4, 301)
    full = rofrft_at(x, a, u)
    monkeypatch.setattr(tr, "_BLOCK_ELEMENTS", T_GRID.count * 7)
    assert np.array_equal(rofrft_at(x, a, u), full)
