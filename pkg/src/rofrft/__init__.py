"""Reduced order fractional Fourier transform (ROFrFT).

The transform of ``x(t)`` at angle ``phi`` is

    X(u) = sqrt(1 - j cot(phi)) * integral x(t) exp(j t^2 cot(phi) / 2 - j t u csc(phi)) dt

which, unlike the conventional fractional Fourier transform, carries no
output chirp in ``u``. At ``phi = pi/2`` it is the unnormalised Fourier
transform.
"""

__version__ = "0.1.0"

from .catalog import (
    ComplexExp, Constant, Delta, Gaussian, LinearChirp, ScaledGaussian, ShiftedScaledGaussian,
    ShiftedTTimesGaussian, TTimesExp, TTimesGaussian, CatalogValue, FormulaSource,
    analytic_rofrft, eval_time, list_errata, spectrum_fn,
)
from .core import (
    FractionalAngle, SampledSignal, Spectrum, SpectrumFn, UniformGrid, angle_from_order,
    grid_from_range, make_angle, make_uniform_grid,
)
from .estimators import FractionalConvolution, ROFrFT
from .exceptions import (
    AngleMismatch, FamilySingularAngle, GridMismatch, GridTooCoarse, InvalidGrid, MissingDerivative,
    MissingParameter, NotPointEvaluable, ROFrFTError, SingularAngle, SupportOverflow, TruncationWarning,
)
from .fracconv import ConvolutionPair, convolution_spectrum, fractional_convolve, verify_convolution_theorem
from .kernel import convolution_weight, kernel
from .rules import PropertyReport, RuleId, RuleParams, rule_rhs, spectrum_derivative, verify_rule
from .transform import bandwidth_report, inverse_rofrft, rofrft_at, rofrft_fast, rofrft_quadrature

__all__ = [
    "AngleMismatch", "CatalogValue", "ComplexExp", "Constant", "ConvolutionPair", "Delta",
    "FamilySingularAngle", "FormulaSource", "FractionalAngle", "FractionalConvolution", "Gaussian",
    "GridMismatch", "GridTooCoarse", "InvalidGrid", "LinearChirp", "MissingDerivative", "MissingParameter",
    "NotPointEvaluable", "PropertyReport", "ROFrFT", "ROFrFTError", "RuleId", "RuleParams", "SampledSignal",
    "ScaledGaussian", "ShiftedScaledGaussian", "ShiftedTTimesGaussian", "SingularAngle", "Spectrum",
    "SpectrumFn", "SupportOverflow", "TTimesExp", "TTimesGaussian", "TruncationWarning", "UniformGrid",
    "analytic_rofrft", "angle_from_order", "bandwidth_report", "convolution_spectrum", "convolution_weight",
    "eval_time", "fractional_convolve", "grid_from_range", "inverse_rofrft", "kernel", "list_errata",
    "make_angle", "make_uniform_grid", "rofrft_at", "rofrft_fast", "rofrft_quadrature", "rule_rhs",
    "spectrum_derivative", "spectrum_fn", "verify_convolution_theorem", "verify_rule",
]
