import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rofrft import (
    InvalidGrid, SampledSignal, SingularAngle, Spectrum, angle_from_order, grid_from_range, make_angle,
    make_uniform_grid,
)

phis = st.floats(-3.1, 3.1).filter(lambda p: abs(math.sin(p)) > 1e-3)


def test_right_angle_values():
    a = make_angle(math.pi / 2)
    assert abs(a.cot_phi) < 1e-15
    assert a.csc_phi == pytest.approx(1.0)
    assert abs(a.amp_root - 1.0) < 1e-15


def test_quarter_angle_amp_root():
    a = make_angle(math.pi / 4)
    assert a.cot_phi == pytest.approx(1.0)
    assert a.csc_phi == pytest.approx(math.sqrt(2))
    expected = 2 ** 0.25 * cmath.exp(-1j * math.pi / 8)
    assert abs(a.amp_root - expected) < 1e-14


@pytest.mark.parametrize("phi", [0.0, math.pi, -math.pi, 2 * math.pi, 1e-12, float("nan"), float("inf")])
def test_singular_angles_rejected(phi):
    with pytest.raises(SingularAngle):
        make_angle(phi)


def test_order_maps_to_angle():
    a = angle_from_order(0.5)
    assert a.phi == pytest.approx(math.pi / 4)
    assert a.order_a == pytest.approx(0.5)


@given(phis)
def test_amp_root_squares_to_radicand(phi):
    a = make_angle(phi)
    radicand = complex(1.0, -a.cot_phi)
    assert abs(a.amp_root ** 2 - radicand) <= 1e-12 * abs(radicand)
    assert a.amp_root.real > 0
    assert a.order_a == pytest.approx(2 * phi / math.pi, rel=1e-15, abs=1e-300)


@given(phis)
def test_amp_root_product_has_modulus_csc(phi):
    a, b = make_angle(phi), make_angle(-phi)
    assert abs(abs(a.amp_root * b.amp_root) - abs(a.csc_phi)) <= 1e-10 * abs(a.csc_phi)
    assert b.amp_root == pytest.approx(a.amp_root.conjugate(), rel=1e-15)


@given(st.floats(0.01, 3.13))
def test_supplementary_angles(phi):
    a, b = make_angle(phi), make_angle(math.pi - phi)
    assert b.cot_phi == pytest.approx(-a.cot_phi, rel=1e-9, abs=1e-12)
    assert abs(b.csc_phi) == pytest.approx(abs(a.csc_phi), rel=1e-12)


def test_grid_examples():
    g = make_uniform_grid(-10, 0.01, 2001)
    assert g.point(0) == -10
    assert g.stop == pytest.approx(10.0)
    sym = make_uniform_grid(-20, 20 / 4095, 4096)
    assert sym.start == -20
    assert sym.points[-1] == pytest.approx(-20 + 4095 * (20 / 4095))
    assert np.array_equal(g.points, -10 + np.arange(2001) * 0.01)


@pytest.mark.parametrize("args", [(0, 1, 1), (0, 0.0, 10), (0, -1.0, 10), (0, 1.0, 0)])
def test_invalid_grid(args):
    with pytest.raises(InvalidGrid):
        make_uniform_grid(*args)


def test_grid_from_range_rejects_empty():
    with pytest.raises(InvalidGrid):
        grid_from_range(1.0, 1.0, 5)


def test_signal_is_immutable_and_checked():
    g = grid_from_range(-1, 1, 5)
    x = SampledSignal(g, np.arange(5))
    with pytest.raises(ValueError):
        x.samples[0] = 3
    with pytest.raises(ValueError):
        SampledSignal(g, np.arange(4))
    with pytest.raises(ValueError):
        SampledSignal(g, [0, 1, np.nan, 2, 3])


def test_spectrum_length_checked():
    with pytest.raises(ValueError):
        Spectrum(make_angle(1.0), grid_from_range(-1, 1, 5), np.zeros(3))
