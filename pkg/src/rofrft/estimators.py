"""scikit-learn style wrappers: each row of ``X`` is one uniformly sampled signal."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_positive, check_signal_array, resolve_angle
from .core import SampledSignal, Spectrum, UniformGrid, grid_from_range
from .fracconv import ConvolutionPair, fractional_convolve
from .transform import fast_grid, inverse_rofrft, rofrft_at, rofrft_fast


class ROFrFT(TransformerMixin, BaseEstimator):
    """Row-wise reduced order fractional Fourier transform.

    Parameters
    ----------
    phi, order : float, optional
        Rotation angle in radians, or fractional order with
        ``phi = order * pi / 2``. Set exactly one.
    method : {"fast", "quadrature"}
        ``"fast"`` returns values on the FFT bins ``u_k = omega_k sin(phi)``;
        ``"quadrature"`` evaluates on ``linspace(u_min, u_max, u_count)``.
    t_start, t_step : float
        Time of the first sample and the sample spacing shared by all rows.
    u_min, u_max, u_count : optional
        Output grid for the quadrature method.

    Attributes
    ----------
    angle_ : FractionalAngle
    t_grid_ : UniformGrid
    u_grid_ : UniformGrid
    n_features_in_ : int
    """

    def __init__(self, phi=None, order=None, method="fast", t_start=0.0, t_step=1.0,
                 u_min=None, u_max=None, u_count=None):
        self.phi = phi
        self.order = order
        self.method = method
        self.t_start = t_start
        self.t_step = t_step
        self.u_min = u_min
        self.u_max = u_max
        self.u_count = u_count

    def fit(self, X, y=None):
        X = check_signal_array(X)
        self.angle_ = resolve_angle(self.phi, self.order)
        self.n_features_in_ = X.shape[1]
        self.t_grid_ = UniformGrid(float(self.t_start), check_positive(self.t_step, "t_step"), X.shape[1])
        if self.method == "fast":
            probe = SampledSignal(self.t_grid_, np.zeros(X.shape[1]))
            self.u_grid_ = fast_grid(probe, self.angle_)
        elif self.method == "quadrature":
            if self.u_min is None or self.u_max is None or self.u_count is None:
                raise ValueError("method='quadrature' needs u_min, u_max and u_count")
            self.u_grid_ = grid_from_range(self.u_min, self.u_max, int(self.u_count))
        else:
            raise ValueError(f"method must be 'fast' or 'quadrature', got {self.method!r}")
        return self

    def transform(self, X):
        check_is_fitted(self, "angle_")
        X = check_signal_array(X, self.n_features_in_)
        out = np.empty((X.shape[0], self.u_grid_.count), dtype=np.complex128)
        for i, row in enumerate(X):
            x = SampledSignal(self.t_grid_, row)
            if self.method == "fast":
                out[i] = rofrft_fast(x, self.angle_).values
            else:
                out[i] = rofrft_at(x, self.angle_, self.u_grid_.points)
        return out

    def inverse_transform(self, S):
        """Invert spectra on ``u_grid_`` back onto ``t_grid_``."""
        check_is_fitted(self, "angle_")
        S = check_signal_array(S, self.u_grid_.count, name="S")
        out = np.empty((S.shape[0], self.t_grid_.count), dtype=np.complex128)
        for i, row in enumerate(S):
            out[i] = inverse_rofrft(Spectrum(self.angle_, self.u_grid_, row), self.t_grid_).samples
        return out


class FractionalConvolution(TransformerMixin, BaseEstimator):
    """Fractional convolution of every row with a fixed kernel signal.

    The time grid ``t_start + k * t_step`` must contain ``t = 0`` as a
    sample. ``kernel`` is sampled on the same grid as the rows.
    """

    def __init__(self, kernel=None, phi=None, order=None, t_start=0.0, t_step=1.0):
        self.kernel = kernel
        self.phi = phi
        self.order = order
        self.t_start = t_start
        self.t_step = t_step

    def fit(self, X, y=None):
        X = check_signal_array(X)
        if self.kernel is None:
            raise ValueError("kernel must be provided")
        g = check_signal_array(self.kernel, X.shape[1], name="kernel")
        if g.shape[0] != 1:
            raise ValueError("kernel must be a single signal")
        self.angle_ = resolve_angle(self.phi, self.order)
        self.n_features_in_ = X.shape[1]
        self.t_grid_ = UniformGrid(float(self.t_start), check_positive(self.t_step, "t_step"), X.shape[1])
        self.kernel_ = SampledSignal(self.t_grid_, g[0])
        # fail early if the grid misses t = 0
        ConvolutionPair(self.kernel_, self.kernel_, self.angle_)
        return self

    def transform(self, X):
        check_is_fitted(self, "kernel_")
        X = check_signal_array(X, self.n_features_in_)
        out = np.empty_like(X)
        for i, row in enumerate(X):
            pair = ConvolutionPair(SampledSignal(self.t_grid_, row), self.kernel_, self.angle_)
            out[i] = fractional_convolve(pair).samples
        return out
