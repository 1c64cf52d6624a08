import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rofrft import SampledSignal, grid_from_range, make_angle
from rofrft.io import (
    FileFormatError, read_signal, read_spectrum, sidecar_path, spectrum_metadata, write_signal, write_spectrum,
)

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(finite, finite), min_size=2, max_size=20))
def test_signal_round_trip_is_bit_exact(tmp_path_factory, values):
    path = tmp_path_factory.mktemp("io") / "x.csv"
    grid = grid_from_range(-1.3, 2.9, len(values))
    x = SampledSignal(grid, [complex(a, b) for a, b in values])
    write_signal(path, x)
    back = read_signal(path)
    assert np.array_equal(back.samples.view(np.float64), x.samples.view(np.float64))
    assert np.array_equal(back.t, x.t) or np.max(np.abs(back.t - x.t)) <= 1e-15 * 3


def test_signal_file_layout(tmp_path):
    path = tmp_path / "x.csv"
    write_signal(path, SampledSignal(grid_from_range(0, 1, 3), [1, 2j, -0.5]))
    raw = path.read_bytes()
    assert b"\r" not in raw
    assert raw.decode().splitlines() == ["t,re,im", "0.0,1.0,0.0", "0.5,0.0,2.0", "1.0,-0.5,0.0"]
    assert not any(p.name.endswith(".tmp") for p in tmp_path.iterdir())


@pytest.mark.parametrize("text", [
    "time,re,im\n0,1,0\n1,1,0\n",
    "t,re,im\n0,1,0\n",
    "t,re,im\n0,1,0\n1,1,0\n3,1,0\n",
    "t,re,im\n1,1,0\n0,1,0\n",
    "t,re,im\n0,1,0\n1,x,0\n",
    "t,re,im\n0,1,0\n1,nan,0\n",
    "",
])
def test_malformed_signal_files(tmp_path, text):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    with pytest.raises(FileFormatError):
        read_signal(path)


def test_spectrum_with_sidecar(tmp_path):
    path = tmp_path / "spec.csv"
    a = make_angle(0.9)
    u = np.linspace(-2, 2, 5)
    values = np.exp(1j * u)
    meta = spectrum_metadata(a, u, "test", errata_applied=["E1"], method="quadrature")
    write_spectrum(path, u, values, meta)
    assert sidecar_path(path) == tmp_path / "spec.meta.json"
    u2, v2, meta2 = read_spectrum(path)
    assert np.array_equal(u2, u) and np.array_equal(v2, values)
    assert meta2["phi"] == 0.9
    assert meta2["order_a"] == a.order_a
    assert meta2["errata_applied"] == ["E1"]
    assert meta2["grid"] == {"start": -2.0, "step": 1.0, "count": 5}
    assert set(meta2) >= {"phi", "order_a", "generator", "errata_applied", "grid"}
    assert json.loads(sidecar_path(path).read_text()) == meta2


def test_spectrum_header_checked(tmp_path):
    path = tmp_path / "spec.csv"
    path.write_text("t,re,im\n0,1,0\n1,1,0\n")
    with pytest.raises(FileFormatError):
        read_spectrum(path)
