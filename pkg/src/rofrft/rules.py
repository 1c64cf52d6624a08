"""Operational rules of the transform and a verifier for them.

:func:`rule_rhs` evaluates the right-hand side of each rule from the base
spectrum alone. :func:`verify_rule` synthesises the operated time signal,
transforms it by quadrature, and measures the residual against the rule.
The two sides never share a code path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .catalog import SignalFamily, eval_time, eval_time_derivative, family_name, spectrum_fn
from .core import FractionalAngle, SampledSignal, SpectrumFn, UniformGrid, grid_from_range
from .exceptions import MissingDerivative, MissingParameter
from .transform import quadrature_spectrum_fn, rofrft_at


class RuleId(str, enum.Enum):
    TimeShift = "TimeShift"
    Modulation = "Modulation"
    TimeFrequencyShift = "TimeFrequencyShift"
    CosineMultiply = "CosineMultiply"
    SineMultiply = "SineMultiply"
    TimeMultiply = "TimeMultiply"
    TimeReversal = "TimeReversal"
    Conjugation = "Conjugation"
    EvenPart = "EvenPart"
    OddPart = "OddPart"
    Differentiation = "Differentiation"
    MixedProduct = "MixedProduct"


class DerivativeMode(str, enum.Enum):
    ANALYTIC = "analytic"
    FINITE_DIFFERENCE = "finite_difference"


@dataclass(frozen=True)
class RuleParams:
    """Rule parameters: shift ``tau``, modulation ``q``, tone ``ell``.

    ``sign`` selects the upper (+1) or lower (-1) branch of the two-sided
    rules, e.g. ``x(t + tau)`` versus ``x(t - tau)`` for the time shift.
    """

    tau: Optional[float] = None
    q: Optional[float] = None
    ell: Optional[float] = None
    sign: int = 1


@dataclass(frozen=True)
class PropertyReport:
    rule: str
    phi: float
    u_grid: UniformGrid
    max_abs_residual: float
    mean_abs_residual: float
    scale: float
    derivative_mode: str = DerivativeMode.ANALYTIC.value
    base: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def relative_residual(self) -> float:
        return self.max_abs_residual / self.scale if self.scale > 0 else self.max_abs_residual


_FD_REL_STEP = 1e-4


def _fd_step(u):
    return _FD_REL_STEP * np.maximum(1.0, np.abs(u))


def derivative_mode(X: SpectrumFn, order: int) -> DerivativeMode:
    has = X.d1 if order == 1 else X.d2
    return DerivativeMode.ANALYTIC if has is not None else DerivativeMode.FINITE_DIFFERENCE


def spectrum_derivative(X: SpectrumFn, u, order: int, allow_fd: bool = True):
    """First or second u-derivative of ``X``.

    Analytic when ``X`` provides it; otherwise central differences with step
    ``1e-4 * max(1, |u|)`` and one Richardson refinement.
    """
    if order not in (1, 2):
        raise ValueError(f"derivative order must be 1 or 2, got {order!r}")
    u = np.asarray(u, dtype=float)
    exact = X.d1 if order == 1 else X.d2
    if exact is not None:
        return exact(u)
    if not allow_fd:
        raise MissingDerivative(f"no analytic derivative of order {order} and finite differences are disabled")
    h = _fd_step(u)

    if order == 1:
        def D(step):
            return (X(u + step) - X(u - step)) / (2.0 * step)
    else:
        f0 = X(u)

        def D(step):
            return (X(u + step) - 2.0 * f0 + X(u - step)) / (step * step)

    return (4.0 * D(0.5 * h) - D(h)) / 3.0


def _need(params: RuleParams, name: str, rule: RuleId) -> float:
    value = getattr(params, name)
    if value is None:
        raise MissingParameter(f"{rule.value} requires parameter {name!r}")
    return float(value)


def rule_rhs(rule, X: SpectrumFn, angle: FractionalAngle, params: RuleParams, u, allow_fd: bool = True):
    """Right-hand side of ``rule`` evaluated from the base spectrum ``X``."""
    rule = RuleId(rule)
    u = np.asarray(u, dtype=float)
    c, s = angle.cot_phi, angle.csc_phi
    sn, cs = angle.sin_phi, angle.cos_phi
    sign = params.sign
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")

    if rule is RuleId.TimeShift:
        tau = _need(params, "tau", rule)
        return np.exp(1j * (0.5 * tau * tau * c + sign * u * tau * s)) * X(u + sign * tau * cs)
    if rule is RuleId.Modulation:
        q = _need(params, "q", rule)
        return X(u - sign * q * sn)
    if rule is RuleId.TimeFrequencyShift:
        tau = _need(params, "tau", rule)
        q = _need(params, "q", rule)
        phase = 0.5 * tau * tau * c - u * tau * s + q * tau
        return np.exp(1j * phase) * X(u - tau * cs - q * sn)
    if rule is RuleId.CosineMultiply:
        ell = _need(params, "ell", rule)
        return 0.5 * (X(u - ell * sn) + X(u + ell * sn))
    if rule is RuleId.SineMultiply:
        ell = _need(params, "ell", rule)
        return (X(u - ell * sn) - X(u + ell * sn)) / 2j
    if rule is RuleId.TimeMultiply:
        return 1j * sn * spectrum_derivative(X, u, 1, allow_fd)
    if rule is RuleId.TimeReversal:
        return X(-u)
    if rule is RuleId.Conjugation:
        return np.conj(X.at_angle(angle.negated())(u))
    if rule is RuleId.EvenPart:
        return 0.5 * (X(u) + X(-u))
    if rule is RuleId.OddPart:
        return 0.5 * (X(u) - X(-u))
    if rule is RuleId.Differentiation:
        return 1j * u * s * X(u) + cs * spectrum_derivative(X, u, 1, allow_fd)
    if rule is RuleId.MixedProduct:
        # (j/2) sin(2phi) [X'' + 2j csc(2phi) (u X' + X)], expanded so that it
        # stays finite where sin(2phi) -> 0
        d1 = spectrum_derivative(X, u, 1, allow_fd)
        d2 = spectrum_derivative(X, u, 2, allow_fd)
        return 1j * sn * cs * d2 - u * d1 - X(u)
    raise ValueError(f"unhandled rule {rule!r}")


def operated_signal(rule, base: SignalFamily, params: RuleParams):
    """Time-domain function ``t -> (operated base)(t)`` for ``rule``."""
    rule = RuleId(rule)
    x = lambda t: eval_time(base, t)  # noqa: E731
    sign = params.sign

    if rule is RuleId.TimeShift:
        tau = _need(params, "tau", rule)
        return lambda t: x(t + sign * tau)
    if rule is RuleId.Modulation:
        q = _need(params, "q", rule)
        return lambda t: np.exp(1j * sign * q * t) * x(t)
    if rule is RuleId.TimeFrequencyShift:
        tau = _need(params, "tau", rule)
        q = _need(params, "q", rule)
        return lambda t: x(t - tau) * np.exp(1j * q * t)
    if rule is RuleId.CosineMultiply:
        ell = _need(params, "ell", rule)
        return lambda t: x(t) * np.cos(ell * t)
    if rule is RuleId.SineMultiply:
        ell = _need(params, "ell", rule)
        return lambda t: x(t) * np.sin(ell * t)
    if rule is RuleId.TimeMultiply:
        return lambda t: t * x(t)
    if rule is RuleId.TimeReversal:
        return lambda t: x(-t)
    if rule is RuleId.Conjugation:
        return lambda t: np.conj(x(t))
    if rule is RuleId.EvenPart:
        return lambda t: 0.5 * (x(t) + x(-t))
    if rule is RuleId.OddPart:
        return lambda t: 0.5 * (x(t) - x(-t))
    if rule is RuleId.Differentiation:
        return lambda t: eval_time_derivative(base, t)
    if rule is RuleId.MixedProduct:
        return lambda t: t * eval_time_derivative(base, t)
    raise ValueError(f"unhandled rule {rule!r}")


def default_time_grid(base: SignalFamily, params: RuleParams, count: int = 4096) -> UniformGrid:
    reach = 20.0 + abs(getattr(base, "tau", 0.0) or 0.0) + abs(params.tau or 0.0)
    return grid_from_range(-reach, reach, count)


def verify_rule(rule, base: SignalFamily, angle: FractionalAngle, params: RuleParams,
                u_grid: UniformGrid, *, mode: str = "analytic", t_grid: Optional[UniformGrid] = None,
                ) -> PropertyReport:
    """Residual of ``rule`` on ``base`` over ``u_grid``.

    LHS: quadrature transform of the operated signal sampled on ``t_grid``.
    RHS: the rule applied to the closed-form base spectrum. For conjugation
    the ``-phi`` base spectrum comes from a second quadrature pass.
    ``mode="finite_difference"`` drops the analytic derivatives from the base.
    """
    rule = RuleId(rule)
    mode = DerivativeMode(mode)
    t_grid = t_grid or default_time_grid(base, params)
    u = u_grid.points

    lhs_signal = SampledSignal.from_function(operated_signal(rule, base, params), t_grid)
    lhs = rofrft_at(lhs_signal, angle, u)

    X = spectrum_fn(base, angle)
    if mode is DerivativeMode.FINITE_DIFFERENCE:
        X = SpectrumFn(X.value, X.angle, rebind=X.rebind)
    if rule is RuleId.Conjugation:
        base_samples = SampledSignal.from_function(lambda t: eval_time(base, t), t_grid)
        mirrored = quadrature_spectrum_fn(base_samples, angle.negated())
        X = SpectrumFn(X.value, X.angle, X.d1, X.d2, rebind=lambda a: mirrored)
    rhs = rule_rhs(rule, X, angle, params, u)

    uses_derivative = rule in (RuleId.TimeMultiply, RuleId.Differentiation, RuleId.MixedProduct)
    used_mode = derivative_mode(X, 2 if rule is RuleId.MixedProduct else 1) if uses_derivative \
        else DerivativeMode.ANALYTIC
    resid = np.abs(lhs - rhs)
    return PropertyReport(
        rule=rule.value,
        phi=angle.phi,
        u_grid=u_grid,
        max_abs_residual=float(resid.max()),
        mean_abs_residual=float(resid.mean()),
        scale=float(np.abs(lhs).max()),
        derivative_mode=used_mode.value,
        base=family_name(base),
    )
