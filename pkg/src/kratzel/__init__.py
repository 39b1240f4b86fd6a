"""Numerical evaluation of the Kratzel integral and two Bessel-kernel
integrals by independent methods: double-exponential quadrature,
steepest-descent expansions with machine-generated coefficients, and
Mellin-Barnes / convergent-series routes.
"""
from .core import bessel_k_scaled, gamma, pochhammer
from .errors import (ConvergenceError, DomainError, KratzelError,
                     LogarithmicCase, NotInvertible, PoleError,
                     ZeroConstantTerm)
from .expansions import (KratzelParams, Regime, convergent_series,
                         expand_mellin_barnes, expand_negative_p,
                         expand_saddle, mb_coefficients,
                         saddle_coefficients, wright_series)
from .large_order import (SaddleInfo, expand_large_order,
                          expansion_coefficients, phi_derivatives,
                          solve_saddle)
from .quadrature import (QuadratureConfig, kratzel_quadrature,
                         whittaker_i_quadrature, whittaker_j_quadrature)
from .result import ExpansionResult
from .series import TruncatedSeries
from .whittaker import (WhittakerParams, diagonal_coefficients,
                        edge_coefficients, expand_i_negative,
                        expand_i_positive, expand_j_negative,
                        kernel_coefficients)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "DomainError", "ExpansionResult", "KratzelError",
    "KratzelParams", "LogarithmicCase", "NotInvertible", "PoleError",
    "QuadratureConfig", "Regime", "SaddleInfo", "TruncatedSeries",
    "WhittakerParams", "ZeroConstantTerm", "bessel_k_scaled",
    "convergent_series", "diagonal_coefficients", "edge_coefficients",
    "expand_i_negative", "expand_i_positive", "expand_j_negative",
    "expand_large_order", "expand_mellin_barnes", "expand_negative_p",
    "expand_saddle", "expansion_coefficients", "gamma",
    "kernel_coefficients", "kratzel_quadrature", "mb_coefficients",
    "phi_derivatives", "pochhammer", "saddle_coefficients", "solve_saddle",
    "whittaker_i_quadrature", "whittaker_j_quadrature", "wright_series",
]
