"""Expansion of the Kratzel integral when the order grows with the argument.

With nu = 1 + a X the power tau**(nu-1) moves into the exponent, the saddle
shifts to the real root tau_s > 1 of tau**(p+1) = 1 + a tau, and the same
reversion pipeline as the fixed-order case generates the coefficients.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError
from .expansions import big_x, reversion_coefficients
from .result import ExpansionResult, make_result

_RESIDUAL_TOL = 1e-13
_MAX_NEWTON = 200
_MAX_COEFFS = 15


@dataclass(frozen=True)
class SaddleInfo:
    """Saddle location and expansion data for the large-order regime.

    ``phi_derivs[i]`` holds the (i+2)-nd derivative of
    phi(tau) = tau**p/p + 1/tau - a log(tau) at the saddle, i.e. the list
    starts at phi''.  ``coefficients[0]`` equals 1 by normalisation.
    """

    tau: float
    phi: float
    phi_derivs: tuple[float, ...]
    coefficients: tuple[complex, ...]


def _saddle_equation(p: float, a: float, tau: float) -> float:
    return tau ** (p + 1.0) - 1.0 - a * tau


def solve_saddle(p: float, a: float) -> float:
    """Unique real root tau > 1 of tau**(p+1) = 1 + a tau.

    Bracketing plus Newton with bisection safeguard; the scaled residual of
    the returned root is below 1e-13.
    """
    if p <= 0 or a <= 0:
        raise DomainError("saddle solve requires p > 0 and a > 0")
    lo = 1.0
    hi = 2.0
    while _saddle_equation(p, a, hi) <= 0.0:
        hi *= 2.0
        if hi > 1e300:
            raise ConvergenceError("failed to bracket the saddle")
    tau = 0.5 * (lo + hi)
    for _ in range(_MAX_NEWTON):
        f = _saddle_equation(p, a, tau)
        if f > 0.0:
            hi = tau
        else:
            lo = tau
        df = (p + 1.0) * tau ** p - a
        step = f / df
        nxt = tau - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - tau) <= 1e-16 * tau:
            tau = nxt
            break
        tau = nxt
    scale = max(1.0, tau ** (p + 1.0))
    if abs(_saddle_equation(p, a, tau)) > _RESIDUAL_TOL * scale:
        raise ConvergenceError("saddle refinement stalled")
    return tau


def phi_value(p: float, a: float, tau: float) -> float:
    return tau ** p / p + 1.0 / tau - a * math.log(tau)


def phi_derivatives(p: float, a: float, tau, n_max: int) -> np.ndarray:
    """Closed-form derivatives phi''(tau) ... phi^(n_max)(tau).

    Works in the precision of ``tau`` (float or numpy longdouble).
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    one = tau * 0 + 1.0
    out = []
    power_fac = one   # (p-1)(p-2)...(p-n+1)
    fac_nm1 = one     # (n-1)!
    for n in range(2, n_max + 1):
        power_fac = power_fac * (p - (n - 1))
        fac_nm1 = fac_nm1 * (n - 1)
        sign = -1.0 if n % 2 else 1.0
        out.append(power_fac * tau ** (one * (p - n))
                   + sign * fac_nm1 * n * tau ** (-(n + one))
                   + a * sign * fac_nm1 * tau ** (-(one * n)))
    return np.array(out)


@lru_cache(maxsize=256)
def _expansion_cached(p: float, a: float, count: int) -> SaddleInfo:
    tau = solve_saddle(p, a)
    # polish the root and run the generator in extended precision; see the
    # matching note in the fixed-order coefficient pipeline
    tau_ld = np.longdouble(tau)
    for _ in range(2):
        f = tau_ld ** np.longdouble(p + 1.0) - 1.0 - a * tau_ld
        df = (p + 1.0) * tau_ld ** np.longdouble(p) - a
        tau_ld = tau_ld - f / df
    m = 2 * count + 4
    derivs = phi_derivatives(p, a, tau_ld, m)
    shift = np.zeros(m + 1, dtype=np.clongdouble)
    fac = np.longdouble(1.0)
    for n in range(2, m + 1):
        fac *= n
        shift[n] = derivs[n - 2] / fac
    d_of_w = reversion_coefficients(shift)
    dtau_dw = d_of_w.derivative()
    phi2 = derivs[0]
    coeff = np.sqrt(phi2) * dtau_dw.coeffs[0 : 2 * count + 1 : 2]
    return SaddleInfo(
        tau=float(tau_ld),
        phi=phi_value(p, a, float(tau_ld)),
        phi_derivs=tuple(float(d) for d in derivs[: 2 * count + 1]),
        coefficients=tuple(complex(c) for c in coeff),
    )


def expansion_coefficients(p: float, a: float, count: int) -> SaddleInfo:
    """Saddle data and the even-power expansion coefficients 0..count.

    The first two coefficients match the closed derivative formulas
    (exercised in the tests); higher ones are only available through the
    reversion pipeline.
    """
    if p <= 0 or a <= 0:
        raise DomainError("expansion requires p > 0 and a > 0")
    if not 0 <= count <= _MAX_COEFFS:
        raise ValueError(f"count must lie in [0, {_MAX_COEFFS}]")
    return _expansion_cached(float(p), float(a), int(count))


def coefficient_from_derivatives(derivs: np.ndarray, k: int) -> float:
    """Closed-form expansion coefficient from saddle derivatives, k <= 2.

    ``derivs`` starts at phi''.  Used to cross-check the reversion route.
    """
    d2 = derivs[0]
    if k == 0:
        return 1.0
    if k == 1:
        d3, d4 = derivs[1], derivs[2]
        return (5.0 * d3 ** 2 - 3.0 * d2 * d4) / (24.0 * d2 ** 3)
    if k == 2:
        d3, d4, d5, d6 = derivs[1], derivs[2], derivs[3], derivs[4]
        return (385.0 * d3 ** 4 - 630.0 * d2 * d3 ** 2 * d4
                + 105.0 * d2 ** 2 * d4 ** 2 + 168.0 * d2 ** 2 * d3 * d5
                - 24.0 * d2 ** 3 * d6) / (3456.0 * d2 ** 6)
    raise ValueError("closed forms are printed for k <= 2 only")


def expand_large_order(p: float, a: float, x: complex,
                       terms: int) -> ExpansionResult:
    """Expansion of the Kratzel integral with nu = 1 + a X, |arg x| < pi/2.

    The order nu is derived from (a, x) internally so that comparisons
    against direct quadrature use the identical parameter.
    """
    if p <= 0 or a <= 0:
        raise DomainError("expansion requires p > 0 and a > 0")
    x = complex(x)
    if x == 0 or abs(cmath.phase(x)) >= 0.5 * math.pi:
        raise DomainError("arg x lies outside the validity sector")
    info = expansion_coefficients(p, a, terms)
    bx = big_x(p, x)
    nu = 1.0 + a * bx
    kappa = (p + 1.0) / p
    half = 0.5 * bx
    series_terms = []
    poch = 1.0 + 0.0j
    for k in range(terms + 1):
        series_terms.append(poch * info.coefficients[k] / half ** k)
        poch *= 0.5 + k
    log_pref = (0.5 * (math.log(2.0 * math.pi)
                       - cmath.log(bx * info.phi_derivs[0]))
                + (nu / (p + 1.0)) * cmath.log(x / p)
                - kappa * bx / info.tau - a * bx / p
                + a * bx * math.log(info.tau))
    return make_result(cmath.exp(log_pref), series_terms)


def derived_order(p: float, a: float, x: complex) -> complex:
    """nu = 1 + a X, the order coupled to the argument in this regime."""
    return 1.0 + a * big_x(p, complex(x))
