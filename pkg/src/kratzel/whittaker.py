"""Expansions of the Bessel-kernel integrals behind the extended Whittaker
and extended confluent hypergeometric functions.

The large-argument behaviour comes from the t -> 0 endpoint; the kernel's
own asymptotic coefficients, the Taylor coefficients of the opposite
endpoint factor, and their diagonal convolution assemble the expansion in
descending half-powers with Bessel K factors of increasing order.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import bessel_k_scaled
from .errors import DomainError
from .result import ExpansionResult, make_result
from .series import TruncatedSeries

_MAX_COEFFS = 30


@dataclass(frozen=True)
class WhittakerParams:
    """Exponents (a, b), kernel scale p > 0 and kernel order nu >= -1/2."""

    a: float
    b: float
    p: float
    nu: float

    def __post_init__(self):
        if self.p <= 0:
            raise DomainError("kernel scale p must be positive")
        if self.nu < -0.5:
            raise DomainError("kernel order nu must be >= -1/2")

    def swapped(self) -> "WhittakerParams":
        return WhittakerParams(a=self.b, b=self.a, p=self.p, nu=self.nu)


def kernel_coefficients(nu: float, count: int) -> np.ndarray:
    """Large-argument Bessel K coefficients a_k(nu), k = 0..count.

    a_k = (-1)^k (1/2+nu)_k (1/2-nu)_k / (k! 2^k); entry 0 is 1, and every
    entry vanishes for k >= 1 when nu = 1/2.
    """
    if not 0 <= count <= _MAX_COEFFS:
        raise ValueError(f"count must lie in [0, {_MAX_COEFFS}]")
    out = np.empty(count + 1)
    out[0] = 1.0
    val = 1.0
    for k in range(1, count + 1):
        val *= -(0.5 + nu + k - 1) * (0.5 - nu + k - 1) / (2.0 * k)
        out[k] = val
    return out


def edge_coefficients(b: float, p: float, k: int, count: int) -> np.ndarray:
    """Taylor data of the opposite-endpoint factor (1-w)^(b+k) e^(-p/(1-w)).

    Returns c_0..c_count with the factor written as
    e^(-p) sum_r (-1)^r c_r w^r / r!.  Generated by series arithmetic; the
    printed closed forms for r <= 3 are checked in the tests.
    """
    if not 0 <= count <= _MAX_COEFFS:
        raise ValueError(f"count must lie in [0, {_MAX_COEFFS}]")
    beta = b + k
    one_minus_w = TruncatedSeries([1.0, -1.0], order=count)
    # -p w / (1 - w) = -p (w + w^2 + ...)
    frac = TruncatedSeries([0.0] + [-p] * count)
    g = one_minus_w.power(beta) * frac.exp()
    out = np.empty(count + 1)
    sign_fac = 1.0  # (-1)^r r!
    for r in range(count + 1):
        out[r] = (sign_fac * g.coeffs[r]).real
        sign_fac *= -(r + 1.0)
    return out


def diagonal_coefficients(params: WhittakerParams, count: int) -> np.ndarray:
    """Diagonal convolution D_r of the kernel and edge coefficient families.

    D_r = sum_l (-1)^l p^l / l! a_{r-l}(nu) c_l(r-l); D_0 = 1.  When
    nu = 1/2 only the l = r term survives and the expansion collapses to
    the extended-confluent form.
    """
    if not 0 <= count <= _MAX_COEFFS:
        raise ValueError(f"count must lie in [0, {_MAX_COEFFS}]")
    a_list = kernel_coefficients(params.nu, count)
    edge = {k: edge_coefficients(params.b, params.p, k, count - k)
            for k in range(count + 1)}
    out = np.empty(count + 1)
    for r in range(count + 1):
        acc = 0.0
        sign_pow_fac = 1.0  # (-1)^l p^l / l!
        for ell in range(r + 1):
            acc += sign_pow_fac * a_list[r - ell] * edge[r - ell][ell]
            sign_pow_fac *= -params.p / (ell + 1.0)
        out[r] = acc
    return out


def _bessel_ladder(order0: float, zeta: complex, count: int) -> list[complex]:
    """Scaled K of orders order0 .. order0+count by forward recurrence.

    Two quadrature anchors start the ladder; upward recurrence in the order
    is stable for K.
    """
    vals = [bessel_k_scaled(order0, zeta)]
    if count >= 1:
        vals.append(bessel_k_scaled(order0 + 1.0, zeta))
    for r in range(2, count + 1):
        mu = order0 + r - 1.0
        vals.append(vals[r - 2] + (2.0 * mu / zeta) * vals[r - 1])
    return vals


def _expand_bessel_sum(a: float, p: float, x: complex, weights,
                       extra_exponent: complex) -> ExpansionResult:
    """Common assembly of sum_r weights[r] K_{a+1+r}(2 sqrt(px)) / (px)^(r/2).

    The prefactor 2 e^(-p) (p/x)^((a+1)/2) and the exponential decay of the
    scaled Bessel values are recombined in a single log-space exponent;
    ``extra_exponent`` folds in the e^z of the reflected-argument case.
    """
    x = complex(x)
    if x == 0 or abs(cmath.phase(x)) >= 0.5 * math.pi:
        raise DomainError("arg x lies outside the validity sector")
    count = len(weights) - 1
    log_px = math.log(p) + cmath.log(x)
    zeta = 2.0 * cmath.exp(0.5 * log_px)
    kvals = _bessel_ladder(a + 1.0, zeta, count)
    root = cmath.exp(0.5 * log_px)
    series_terms = [weights[r] * kvals[r] / root ** r
                    for r in range(count + 1)]
    log_pref = (math.log(2.0) - p - zeta
                + 0.5 * (a + 1.0) * (math.log(p) - cmath.log(x))
                + extra_exponent)
    return make_result(cmath.exp(log_pref), series_terms)


def expand_i_negative(params: WhittakerParams, x: complex,
                      terms: int) -> ExpansionResult:
    """Expansion of the Bessel-kernel integral at argument -x, |arg x| < pi/2."""
    weights = diagonal_coefficients(params, terms)
    return _expand_bessel_sum(params.a, params.p, x, weights, 0.0)


def expand_i_positive(params: WhittakerParams, z: complex,
                      terms: int) -> ExpansionResult:
    """Expansion at positive argument via the Kummer-type transformation.

    I(a, b; z) = e^z I(b, a; -z); the e^z factor is folded into the
    log-space prefactor rather than multiplied on afterwards.
    """
    z = complex(z)
    if z.real <= 0:
        raise DomainError("positive-argument expansion requires Re z > 0")
    swapped = params.swapped()
    weights = diagonal_coefficients(swapped, terms)
    return _expand_bessel_sum(swapped.a, swapped.p, z, weights, z)


def expand_j_negative(a: float, b: float, p: float, x: complex,
                      terms: int) -> ExpansionResult:
    """Expansion of the scalar-kernel integral at argument -x.

    Same shape as the Bessel-kernel expansion with weights
    (-1)^r p^r c_r(0) / r!, where the edge coefficients use beta = b.
    """
    if p <= 0:
        raise DomainError("kernel scale p must be positive")
    edge = edge_coefficients(b, p, 0, terms)
    weights = np.empty(terms + 1)
    fac = 1.0
    for r in range(terms + 1):
        weights[r] = fac * edge[r]
        fac *= -p / (r + 1.0)
    return _expand_bessel_sum(a, p, x, weights, 0.0)
