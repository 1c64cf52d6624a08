"""Input checks shared by the estimator wrappers.

``sklearn.utils.check_array`` rejects complex input, so signals are
validated here instead.
"""

from __future__ import annotations

import numbers
from typing import Optional

import numpy as np

from .core import FractionalAngle, angle_from_order, make_angle


def check_signal_array(X, n_features: Optional[int] = None, name: str = "X") -> np.ndarray:
    """Return ``X`` as a 2-D complex128 array of shape ``(n_signals, n_samples)``.

    A 1-D input is treated as a single signal.
    """
    arr = np.asarray(X)
    if arr.dtype == object or not (np.issubdtype(arr.dtype, np.number) or arr.dtype == bool):
        raise TypeError(f"{name} must be numeric, got dtype {arr.dtype}")
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 1-D or 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] < 2:
        raise ValueError(f"{name} needs at least one signal of two samples, got shape {arr.shape}")
    arr = arr.astype(np.complex128, copy=False)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinity")
    if n_features is not None and arr.shape[1] != n_features:
        raise ValueError(f"{name} has {arr.shape[1]} samples per signal; the estimator was fitted with {n_features}")
    return arr


def resolve_angle(phi=None, order=None) -> FractionalAngle:
    """Angle from exactly one of ``phi`` (radians) or ``order`` (``phi = order * pi / 2``)."""
    if (phi is None) == (order is None):
        raise ValueError("set exactly one of phi or order")
    value = phi if phi is not None else order
    if not isinstance(value, numbers.Real):
        raise TypeError(f"angle must be a real number, got {type(value).__name__}")
    return make_angle(phi) if phi is not None else angle_from_order(order)


def check_positive(value, name: str) -> float:
    if not isinstance(value, numbers.Real) or not value > 0:
        raise ValueError(f"{name} must be a positive number, got {value!r}")
    return float(value)
