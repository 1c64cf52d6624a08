"""Shared domain types: rotation angles, sampling grids, signals and spectra."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .exceptions import InvalidGrid, SingularAngle

EPS_ANGLE = 1e-9


@dataclass(frozen=True)
class FractionalAngle:
    """Rotation angle ``phi`` with its trigonometric factors precomputed.

    ``amp_root`` is the principal square root of ``1 - j cot(phi)``. The
    radicand always has real part 1, so the principal branch is unambiguous
    and ``amp_root(-phi) == conj(amp_root(phi))``.
    """

    phi: float
    order_a: float
    sin_phi: float
    cos_phi: float
    cot_phi: float
    csc_phi: float
    amp_root: complex

    def negated(self) -> "FractionalAngle":
        return make_angle(-self.phi)

    def same_as(self, other: "FractionalAngle") -> bool:
        return self.phi == other.phi


def make_angle(phi: float, eps: float = EPS_ANGLE) -> FractionalAngle:
    """Build a :class:`FractionalAngle`, rejecting angles with ``|sin(phi)| <= eps``."""
    phi = float(phi)
    if not math.isfinite(phi):
        raise SingularAngle(f"angle must be finite, got {phi!r}")
    s = math.sin(phi)
    if abs(s) <= eps:
        raise SingularAngle(
            f"|sin(phi)| = {abs(s):.3g} <= {eps:g} at phi = {phi!r}; cot and csc diverge"
        )
    c = math.cos(phi)
    cot = c / s
    return FractionalAngle(
        phi=phi,
        order_a=2.0 * phi / math.pi,
        sin_phi=s,
        cos_phi=c,
        cot_phi=cot,
        csc_phi=1.0 / s,
        amp_root=complex(np.sqrt(complex(1.0, -cot))),
    )


def angle_from_order(a: float, eps: float = EPS_ANGLE) -> FractionalAngle:
    """Angle for fractional order ``a`` (``phi = a * pi / 2``)."""
    return make_angle(float(a) * math.pi / 2.0, eps=eps)


@dataclass(frozen=True)
class UniformGrid:
    start: float
    step: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.step)):
            raise InvalidGrid("grid start and step must be finite")
        if not self.step > 0:
            raise InvalidGrid(f"grid step must be positive, got {self.step!r}")
        if int(self.count) != self.count or self.count < 2:
            raise InvalidGrid(f"grid needs at least 2 points, got count={self.count!r}")

    def point(self, k: int) -> float:
        return self.start + k * self.step

    @property
    def points(self) -> np.ndarray:
        return self.start + np.arange(self.count) * self.step

    @property
    def stop(self) -> float:
        return self.point(self.count - 1)

    @property
    def span(self) -> float:
        return (self.count - 1) * self.step

    def same_as(self, other: "UniformGrid", rtol: float = 1e-12) -> bool:
        if self.count != other.count:
            return False
        scale = max(abs(self.start), abs(other.start), self.span, 1.0)
        return (
            abs(self.start - other.start) <= rtol * scale
            and abs(self.step - other.step) <= rtol * max(self.step, other.step)
        )


def make_uniform_grid(start: float, step: float, count: int) -> UniformGrid:
    return UniformGrid(float(start), float(step), int(count))


def grid_from_range(lo: float, hi: float, count: int) -> UniformGrid:
    """Grid with ``count`` points spanning ``[lo, hi]`` inclusive."""
    if count < 2 or not hi > lo:
        raise InvalidGrid(f"cannot span [{lo}, {hi}] with {count} points")
    return UniformGrid(float(lo), (float(hi) - float(lo)) / (count - 1), int(count))


def _frozen_complex(values, n: int, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != n:
        raise ValueError(f"{what} has {arr.shape[0]} values but the grid has {n} points")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled complex signal on a time grid."""

    grid: UniformGrid
    samples: np.ndarray

    def __post_init__(self):
        arr = _frozen_complex(self.samples, self.grid.count, "samples")
        if not np.all(np.isfinite(arr)):
            raise ValueError("signal samples must be finite")
        object.__setattr__(self, "samples", arr)

    @property
    def t(self) -> np.ndarray:
        return self.grid.points

    @classmethod
    def from_function(cls, func: Callable[[np.ndarray], np.ndarray], grid: UniformGrid):
        return cls(grid, func(grid.points))


@dataclass(frozen=True)
class Spectrum:
    """ROFrFT values on a ``u`` grid, tagged with the producing angle."""

    angle: FractionalAngle
    grid: UniformGrid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_complex(self.values, self.grid.count, "values"))

    @property
    def u(self) -> np.ndarray:
        return self.grid.points


@dataclass(frozen=True)
class SpectrumFn:
    """A spectrum as a function of ``u``, optionally with analytic u-derivatives.

    ``rebind`` returns the same signal's spectrum at another angle; it is
    needed by rules (conjugation) that evaluate the base spectrum at ``-phi``.
    """

    value: Callable[[np.ndarray], np.ndarray]
    angle: FractionalAngle
    d1: Optional[Callable[[np.ndarray], np.ndarray]] = None
    d2: Optional[Callable[[np.ndarray], np.ndarray]] = None
    rebind: Optional[Callable[[FractionalAngle], "SpectrumFn"]] = field(default=None, repr=False)

    def __call__(self, u):
        return self.value(np.asarray(u, dtype=float))

    def at_angle(self, angle: FractionalAngle) -> "SpectrumFn":
        if angle.same_as(self.angle):
            return self
        if self.rebind is None:
            raise ValueError("this spectrum function cannot be re-evaluated at another angle")
        return self.rebind(angle)
