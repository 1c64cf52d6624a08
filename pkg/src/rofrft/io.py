"""CSV signal/spectrum files and their JSON sidecars.

Signal files have header ``t,re,im``; spectrum files ``u,re,im`` plus a
``<stem>.meta.json`` sidecar. Floats are written with ``repr`` (shortest
round-trip form), so re-reading reproduces the same doubles. All writes
go through a temporary file and ``os.replace``.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

import numpy as np

from .core import SampledSignal, Spectrum, UniformGrid

SIGNAL_HEADER = ("t", "re", "im")
SPECTRUM_HEADER = ("u", "re", "im")
STEP_RTOL = 1e-9


class FileFormatError(ValueError):
    """Malformed signal or spectrum file."""


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _format_rows(header, axis, values) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    values = np.asarray(values, dtype=np.complex128)
    for a, v in zip(np.asarray(axis, dtype=float), values):
        buf.write(f"{float(a)!r},{float(v.real)!r},{float(v.imag)!r}\n")
    return buf.getvalue()


def _read_rows(path, header):
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            first = next(reader)
        except StopIteration:
            raise FileFormatError(f"{path}: empty file") from None
        if tuple(c.strip() for c in first) != header:
            raise FileFormatError(f"{path}: header must be exactly {','.join(header)!r}, got {','.join(first)!r}")
        rows = [r for r in reader if r]
    if not rows:
        raise FileFormatError(f"{path}: no data rows")
    try:
        data = np.array([[float(c) for c in r] for r in rows], dtype=float)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from None
    if data.shape[1] != 3:
        raise FileFormatError(f"{path}: expected 3 columns per row")
    if not np.all(np.isfinite(data)):
        raise FileFormatError(f"{path}: non-finite values")
    return data[:, 0], data[:, 1] + 1j * data[:, 2]


def grid_from_axis(axis, what: str = "t") -> UniformGrid:
    """Recover a uniform grid from strictly increasing, constant-step samples."""
    axis = np.asarray(axis, dtype=float)
    if axis.size < 2:
        raise FileFormatError(f"need at least two {what} samples")
    diffs = np.diff(axis)
    step = (axis[-1] - axis[0]) / (axis.size - 1)
    if step <= 0 or np.any(diffs <= 0):
        raise FileFormatError(f"{what} must be strictly increasing")
    # rounding of the stored abscissae adds a few ulps of the largest |t|
    slack = STEP_RTOL * step + 8.0 * np.finfo(float).eps * np.max(np.abs(axis))
    if np.max(np.abs(diffs - step)) > slack:
        raise FileFormatError(f"{what} step is not constant to {STEP_RTOL:g} relative")
    return UniformGrid(float(axis[0]), float(step), int(axis.size))


def write_signal(path, x: SampledSignal) -> None:
    atomic_write_text(path, _format_rows(SIGNAL_HEADER, x.t, x.samples))


def read_signal(path) -> SampledSignal:
    t, values = _read_rows(path, SIGNAL_HEADER)
    return SampledSignal(grid_from_axis(t, "t"), values)


def sidecar_path(path) -> Path:
    path = Path(path)
    return path.with_name(path.stem + ".meta.json")


def spectrum_metadata(angle, u, generator: str, errata_applied=(), **extra) -> dict:
    u = np.asarray(u, dtype=float)
    if u.size >= 2:
        step = (u[-1] - u[0]) / (u.size - 1)
    else:
        step = 0.0
    meta = {
        "phi": angle.phi,
        "order_a": angle.order_a,
        "generator": generator,
        "errata_applied": sorted(errata_applied),
        "grid": {"start": float(u[0]), "step": float(step), "count": int(u.size)},
    }
    meta.update(extra)
    return meta


def write_spectrum(path, u, values, meta: dict) -> None:
    """Write ``u,re,im`` rows and the JSON sidecar next to ``path``."""
    atomic_write_text(path, _format_rows(SPECTRUM_HEADER, u, values))
    atomic_write_text(sidecar_path(path), json.dumps(meta, indent=2, sort_keys=True) + "\n")


def read_spectrum(path, meta_path: Optional[str] = None):
    """Return ``(u, values, meta)``; ``meta`` is ``{}`` when no sidecar exists."""
    u, values = _read_rows(path, SPECTRUM_HEADER)
    side = Path(meta_path) if meta_path else sidecar_path(path)
    meta = {}
    if side.exists():
        with open(side, encoding="utf-8") as fh:
            meta = json.load(fh)
    return u, values, meta


def spectrum_from_file(path, angle) -> Spectrum:
    u, values, _ = read_spectrum(path)
    return Spectrum(angle, grid_from_axis(u, "u"), values)
