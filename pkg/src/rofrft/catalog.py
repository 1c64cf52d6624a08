"""Closed-form transforms of the standard signal families.

Four of the published closed forms disagree with direct evaluation of the
defining integral. :func:`analytic_rofrft` returns the corrected expression
and tags it; :func:`uncorrected_rofrft` keeps the printed expression so the
verification suite can show it failing the oracle. See :func:`list_errata`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import FractionalAngle, SpectrumFn
from .exceptions import FamilySingularAngle, NotPointEvaluable

SQRT_2PI = math.sqrt(2.0 * math.pi)
_EPS_COS = 1e-9
_EPS_CHIRP = 1e-9


def _check_sign(sign):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def _check_rate(rate_a):
    if not rate_a > 0:
        raise ValueError(f"Gaussian rate must be positive, got {rate_a!r}")


@dataclass(frozen=True)
class Delta:
    tau: float = 0.0


@dataclass(frozen=True)
class Constant:
    pass


@dataclass(frozen=True)
class ComplexExp:
    """``exp(sign * j q t)``."""

    q: float
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)


@dataclass(frozen=True)
class TTimesExp:
    """``t * exp(sign * j q t)``."""

    q: float
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)


@dataclass(frozen=True)
class LinearChirp:
    """``exp(sign * j rate_a t^2 / 2)``."""

    rate_a: float
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)


@dataclass(frozen=True)
class Gaussian:
    pass


@dataclass(frozen=True)
class ScaledGaussian:
    """``exp(-rate_a t^2 / 2)``."""

    rate_a: float

    def __post_init__(self):
        _check_rate(self.rate_a)


@dataclass(frozen=True)
class ShiftedScaledGaussian:
    """``exp(-rate_a (t - tau)^2 / 2)``."""

    rate_a: float
    tau: float

    def __post_init__(self):
        _check_rate(self.rate_a)


@dataclass(frozen=True)
class TTimesGaussian:
    pass


@dataclass(frozen=True)
class ShiftedTTimesGaussian:
    """``(t - tau) exp(-(t - tau)^2 / 2)``."""

    tau: float


SignalFamily = Union[
    Delta, Constant, ComplexExp, TTimesExp, LinearChirp, Gaussian,
    ScaledGaussian, ShiftedScaledGaussian, TTimesGaussian, ShiftedTTimesGaussian,
]

GAUSSIAN_TYPES = (Gaussian, ScaledGaussian, ShiftedScaledGaussian, TTimesGaussian, ShiftedTTimesGaussian)
NON_INTEGRABLE = (Constant, ComplexExp, TTimesExp, LinearChirp)


class FormulaSource(str, enum.Enum):
    AS_PRINTED = "as_printed"
    DERIVED_CORRECTED = "derived_corrected"


@dataclass(frozen=True)
class CatalogValue:
    value: Union[complex, np.ndarray]
    formula_source: FormulaSource


@dataclass(frozen=True)
class Erratum:
    id: str
    family: type
    printed: str
    corrected: str
    cause: str


_ERRATA = (
    Erratum(
        "E1", Constant,
        printed="sqrt(2 pi (1 + j tan phi)) exp(+j csc(2 phi) u^2)",
        corrected="sqrt(2 pi (1 + j tan phi)) exp(-j csc(2 phi) u^2)",
        cause="sign of the quadratic phase; the Fresnel integral gives -j B^2 / (4 A)",
    ),
    Erratum(
        "E2", TTimesExp,
        printed="(csc phi -/+ q) tan phi * X_exp(u)",
        corrected="(u sec phi -/+ q tan phi) * X_exp(u)",
        cause="u-derivative of the complex-exponential transform was not carried through",
    ),
    Erratum(
        "E3", TTimesGaussian,
        printed="-j 2 sqrt(2 pi) (1 + j cot phi) sin phi u exp(-(1 + j cot phi) u^2 / 2)",
        corrected="-j sqrt(2 pi) (1 + j cot phi) sin phi u exp(-(1 + j cot phi) u^2 / 2)",
        cause="first-moment Gaussian integral carries B / (2 A), not B / A",
    ),
    Erratum(
        "E4", ShiftedTTimesGaussian,
        printed="sqrt(2 pi) (tau (1 + j cot) - 2 j u csc) / (1 - j cot) e^{-tau^2/2} exp(...)",
        corrected="sqrt(2 pi) j (tau cot - u csc) / (1 - j cot) e^{-tau^2/2} exp(...)",
        cause="same B / A slip in the first-moment term, propagated through the recombination",
    ),
)

_ERRATUM_BY_FAMILY = {e.family: e for e in _ERRATA}


def list_errata() -> tuple:
    return _ERRATA


def erratum_for(family: SignalFamily):
    return _ERRATUM_BY_FAMILY.get(type(family))


def family_name(family: SignalFamily) -> str:
    return type(family).__name__


# -- time domain -------------------------------------------------------------


def eval_time(family: SignalFamily, t):
    """Time-domain value of ``family`` at ``t`` (broadcasts over arrays)."""
    t = np.asarray(t, dtype=float)
    if isinstance(family, Delta):
        raise NotPointEvaluable("the delta family is a distribution; synthesise it as a discrete impulse")
    if isinstance(family, Constant):
        return np.ones_like(t, dtype=np.complex128)
    if isinstance(family, ComplexExp):
        return np.exp(1j * family.sign * family.q * t)
    if isinstance(family, TTimesExp):
        return t * np.exp(1j * family.sign * family.q * t)
    if isinstance(family, LinearChirp):
        return np.exp(0.5j * family.sign * family.rate_a * t * t)
    if isinstance(family, Gaussian):
        return np.exp(-0.5 * t * t).astype(np.complex128)
    if isinstance(family, ScaledGaussian):
        return np.exp(-0.5 * family.rate_a * t * t).astype(np.complex128)
    if isinstance(family, ShiftedScaledGaussian):
        s = t - family.tau
        return np.exp(-0.5 * family.rate_a * s * s).astype(np.complex128)
    if isinstance(family, TTimesGaussian):
        return (t * np.exp(-0.5 * t * t)).astype(np.complex128)
    if isinstance(family, ShiftedTTimesGaussian):
        s = t - family.tau
        return (s * np.exp(-0.5 * s * s)).astype(np.complex128)
    raise TypeError(f"unknown signal family {family!r}")


def eval_time_derivative(family: SignalFamily, t):
    """Analytic ``d/dt`` of the Gaussian-type families."""
    t = np.asarray(t, dtype=float)
    if isinstance(family, (Gaussian, ScaledGaussian, ShiftedScaledGaussian)):
        a = getattr(family, "rate_a", 1.0)
        s = t - getattr(family, "tau", 0.0)
        return (-a * s * np.exp(-0.5 * a * s * s)).astype(np.complex128)
    if isinstance(family, (TTimesGaussian, ShiftedTTimesGaussian)):
        s = t - getattr(family, "tau", 0.0)
        return ((1.0 - s * s) * np.exp(-0.5 * s * s)).astype(np.complex128)
    raise NotImplementedError(f"no analytic time derivative for {family_name(family)}")


# -- closed forms ------------------------------------------------------------


def _require_cos(angle: FractionalAngle, family):
    if abs(angle.cos_phi) <= _EPS_COS:
        raise FamilySingularAngle(
            f"{family_name(family)} requires cos(phi) != 0 (tan(phi) diverges; "
            f"the transform at phi = pi/2 is a delta)"
        )


def _chirp_rate(family: LinearChirp, angle: FractionalAngle) -> float:
    k = family.sign * family.rate_a + angle.cot_phi
    if abs(k) <= _EPS_CHIRP:
        raise FamilySingularAngle(
            "LinearChirp requires sign*rate_a + cot(phi) != 0 "
            "(chirp rate matched to the transform; the image is a delta)"
        )
    return k


def _constant_amplitude(angle: FractionalAngle) -> complex:
    tan = angle.sin_phi / angle.cos_phi
    return complex(np.sqrt(2.0 * math.pi * complex(1.0, tan)))


def _complex_exp(q, sign, angle, u):
    tan = angle.sin_phi / angle.cos_phi
    csc2 = 1.0 / (2.0 * angle.sin_phi * angle.cos_phi)
    phase = -0.5 * q * q * tan - csc2 * u * u + sign * q * u / angle.cos_phi
    return _constant_amplitude(angle) * np.exp(1j * phase)


def _gaussian_form(family, angle: FractionalAngle):
    """Coefficients of ``(alpha + beta u) exp(gamma + delta u + kappa u^2)``.

    Every Gaussian-type transform has this shape; it gives exact
    u-derivatives without symbolic algebra.
    """
    c, s = angle.cot_phi, angle.csc_phi
    A = angle.amp_root
    if isinstance(family, Gaussian):
        return SQRT_2PI, 0.0, 0.0, 0.0, -0.5 * complex(1.0, c)
    if isinstance(family, ScaledGaussian):
        a = family.rate_a
        alpha = A * np.sqrt(2.0 * math.pi / complex(a, -c))
        kappa = -0.5 * complex(a, c) * s * s / (a * a + c * c)
        return alpha, 0.0, 0.0, 0.0, kappa
    if isinstance(family, ShiftedScaledGaussian):
        a, tau = family.rate_a, family.tau
        alpha = A * np.sqrt(2.0 * math.pi / complex(a, -c))
        w = -complex(a, c) / (a * a + c * c)
        return alpha, 0.0, w * (-0.5j * a * tau * tau * c), w * (1j * a * tau * s), w * 0.5 * s * s
    if isinstance(family, TTimesGaussian):
        return 0.0, -1j * SQRT_2PI * complex(1.0, c) * angle.sin_phi, 0.0, 0.0, -0.5 * complex(1.0, c)
    if isinstance(family, ShiftedTTimesGaussian):
        tau = family.tau
        d = complex(1.0, -c)
        alpha = SQRT_2PI * 1j * tau * c / d
        beta = -SQRT_2PI * 1j * s / d
        gamma = -0.5 * tau * tau + 0.5 * tau * tau / d
        delta = -1j * tau * s / d
        kappa = -0.5 * s * s / d
        return alpha, beta, gamma, delta, kappa
    raise TypeError(f"{family_name(family)} is not a Gaussian-type family")


def _corrected_value(family, angle: FractionalAngle, u):
    c, s = angle.cot_phi, angle.csc_phi
    A = angle.amp_root
    if isinstance(family, Delta):
        tau = family.tau
        return A * np.exp(1j * (0.5 * tau * tau * c - tau * u * s))
    if isinstance(family, Constant):
        _require_cos(angle, family)
        csc2 = 1.0 / (2.0 * angle.sin_phi * angle.cos_phi)
        return _constant_amplitude(angle) * np.exp(-1j * csc2 * u * u)
    if isinstance(family, ComplexExp):
        _require_cos(angle, family)
        return _complex_exp(family.q, family.sign, angle, u)
    if isinstance(family, TTimesExp):
        _require_cos(angle, family)
        tan = angle.sin_phi / angle.cos_phi
        factor = u / angle.cos_phi - family.sign * family.q * tan
        return factor * _complex_exp(family.q, family.sign, angle, u)
    if isinstance(family, LinearChirp):
        k = _chirp_rate(family, angle)
        amp = A * np.sqrt(2j * math.pi / k)
        return amp * np.exp(-0.5j * s * s * u * u / k)
    if isinstance(family, Gaussian):
        return SQRT_2PI * np.exp(-0.5 * complex(1.0, c) * u * u)
    if isinstance(family, ScaledGaussian):
        a = family.rate_a
        amp = A * np.sqrt(2.0 * math.pi / complex(a, -c))
        return amp * np.exp(-0.5 * complex(a, c) * (s * s / (a * a + c * c)) * u * u)
    if isinstance(family, ShiftedScaledGaussian):
        a, tau = family.rate_a, family.tau
        amp = A * np.sqrt(2.0 * math.pi / complex(a, -c))
        bracket = 0.5 * s * s * u * u + 1j * a * tau * s * u - 0.5j * a * tau * tau * c
        return amp * np.exp(-complex(a, c) / (a * a + c * c) * bracket)
    if isinstance(family, TTimesGaussian):
        return -1j * SQRT_2PI * complex(1.0, c) * angle.sin_phi * u * np.exp(-0.5 * complex(1.0, c) * u * u)
    if isinstance(family, ShiftedTTimesGaussian):
        tau = family.tau
        d = complex(1.0, -c)
        b = 1j * u * s - tau
        return (SQRT_2PI * 1j * (tau * c - u * s) / d
                * math.exp(-0.5 * tau * tau) * np.exp(0.5 * b * b / d))
    raise TypeError(f"unknown signal family {family!r}")


def analytic_rofrft(family: SignalFamily, angle: FractionalAngle, u) -> CatalogValue:
    """Closed-form transform of ``family`` at ``u`` (scalar or array)."""
    u_arr = np.asarray(u, dtype=float)
    value = np.asarray(_corrected_value(family, angle, u_arr), dtype=np.complex128)
    if value.shape != u_arr.shape:
        value = np.broadcast_to(value, u_arr.shape).copy()
    if value.ndim == 0:
        value = complex(value)
    source = FormulaSource.DERIVED_CORRECTED if erratum_for(family) else FormulaSource.AS_PRINTED
    return CatalogValue(value, source)


def uncorrected_rofrft(family: SignalFamily, angle: FractionalAngle, u):
    """The printed (erroneous) closed form for the four erratum families."""
    u = np.asarray(u, dtype=float)
    c, s = angle.cot_phi, angle.csc_phi
    if isinstance(family, Constant):
        _require_cos(angle, family)
        csc2 = 1.0 / (2.0 * angle.sin_phi * angle.cos_phi)
        return _constant_amplitude(angle) * np.exp(1j * csc2 * u * u)
    if isinstance(family, TTimesExp):
        _require_cos(angle, family)
        tan = angle.sin_phi / angle.cos_phi
        factor = (s - family.sign * family.q) * tan
        return factor * _complex_exp(family.q, family.sign, angle, u)
    if isinstance(family, TTimesGaussian):
        return 2.0 * _corrected_value(family, angle, u)
    if isinstance(family, ShiftedTTimesGaussian):
        tau = family.tau
        d = complex(1.0, -c)
        b = 1j * u * s - tau
        num = tau * complex(1.0, c) - 2j * u * s
        return SQRT_2PI * num / d * math.exp(-0.5 * tau * tau) * np.exp(0.5 * b * b / d)
    raise ValueError(f"{family_name(family)} has no erratum; its printed form is the corrected one")


def spectrum_fn(family: SignalFamily, angle: FractionalAngle) -> SpectrumFn:
    """Closed-form spectrum as a :class:`SpectrumFn`.

    Gaussian-type families carry exact first and second u-derivatives.
    """

    def value(u):
        return np.asarray(_corrected_value(family, angle, np.asarray(u, dtype=float)), dtype=np.complex128)

    d1 = d2 = None
    if isinstance(family, GAUSSIAN_TYPES):
        alpha, beta, gamma, delta, kappa = _gaussian_form(family, angle)

        def d1(u):
            u = np.asarray(u, dtype=float)
            lin = delta + 2.0 * kappa * u
            return (beta + (alpha + beta * u) * lin) * np.exp(gamma + delta * u + kappa * u * u)

        def d2(u):
            u = np.asarray(u, dtype=float)
            lin = delta + 2.0 * kappa * u
            poly = 2.0 * beta * lin + (alpha + beta * u) * (lin * lin + 2.0 * kappa)
            return poly * np.exp(gamma + delta * u + kappa * u * u)

    return SpectrumFn(value, angle, d1=d1, d2=d2, rebind=lambda other: spectrum_fn(family, other))


def gaussian_form_value(family: SignalFamily, angle: FractionalAngle, u):
    """Evaluate the quadratic-exponential form directly (consistency checks)."""
    alpha, beta, gamma, delta, kappa = _gaussian_form(family, angle)
    u = np.asarray(u, dtype=float)
    return (alpha + beta * u) * np.exp(gamma + delta * u + kappa * u * u)


def parse_family(name: str, *, tau=None, q=None, rate=None, sign=1) -> SignalFamily:
    """Build a family from a CLI-style name and keyword parameters."""
    key = name.strip().lower().replace("_", "-")

    def need(value, flag):
        if value is None:
            raise ValueError(f"family {name!r} requires --{flag}")
        return float(value)

    if key == "delta":
        return Delta(float(tau or 0.0))
    if key == "constant":
        return Constant()
    if key in ("exp", "complex-exp"):
        return ComplexExp(need(q, "q"), int(sign))
    if key in ("texp", "t-exp"):
        return TTimesExp(need(q, "q"), int(sign))
    if key in ("chirp", "linear-chirp"):
        return LinearChirp(need(rate, "rate"), int(sign))
    if key == "gaussian":
        return Gaussian()
    if key == "scaled-gaussian":
        return ScaledGaussian(need(rate, "rate"))
    if key == "shifted-gaussian":
        return ShiftedScaledGaussian(float(rate if rate is not None else 1.0), need(tau, "tau"))
    if key in ("t-gaussian", "tgaussian"):
        return TTimesGaussian()
    if key in ("shifted-t-gaussian", "shifted-tgaussian"):
        return ShiftedTTimesGaussian(need(tau, "tau"))
    raise ValueError(f"unknown signal family {name!r}")


FAMILY_NAMES = (
    "delta", "constant", "exp", "texp", "chirp", "gaussian", "scaled-gaussian",
    "shifted-gaussian", "t-gaussian", "shifted-t-gaussian",
)
