"""Expansions and convergent series for the Kratzel integral.

Covers the steepest-descent expansion for p > 0 (coefficients generated by
series reversion about the saddle at tau = 1), the equivalent inverse
factorial (Mellin-Barnes) form, the convergent gamma series, and the series
and asymptotics for p < 0.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import gamma, near_nonpositive_integer, pochhammer
from .errors import ConvergenceError, DomainError, LogarithmicCase
from .result import ExpansionResult, make_result
from .series import TruncatedSeries

_LOG_POLE_TOL = 1e-10   # proximity of k p + nu to a non-negative integer
_SUM_RTOL = 1e-15       # term-ratio stopping for convergent series
_MAX_TERMS = 10_000
_MAX_COEFFS = 20


class Regime(enum.Enum):
    """Parameter ranges of p with distinct evaluation routes."""

    POSITIVE = "p > 0"
    ZERO = "p = 0"
    BETWEEN_NEG_ONE_AND_ZERO = "-1 < p < 0"
    NEG_ONE = "p = -1"
    BELOW_NEG_ONE = "p < -1"


def classify(p: float) -> Regime:
    if p > 0:
        return Regime.POSITIVE
    if p == 0:
        return Regime.ZERO
    if p > -1:
        return Regime.BETWEEN_NEG_ONE_AND_ZERO
    if p == -1:
        return Regime.NEG_ONE
    return Regime.BELOW_NEG_ONE


@dataclass(frozen=True)
class KratzelParams:
    """Validated (p, nu) pair with its evaluation regime.

    For p <= 0 the defining integral only converges for Re nu < 0.
    """

    p: float
    nu: complex
    regime: Regime

    @classmethod
    def make(cls, p: float, nu: complex) -> "KratzelParams":
        p = float(p)
        nu = complex(nu)
        regime = classify(p)
        if regime is not Regime.POSITIVE and nu.real >= 0:
            raise DomainError("p <= 0 requires Re(nu) < 0")
        return cls(p=p, nu=nu, regime=regime)

    @property
    def kappa(self) -> float:
        return (self.p + 1.0) / self.p

    @property
    def scale_base(self) -> float:
        """h = p**(1/p), the Mellin kernel scale."""
        return self.p ** (1.0 / self.p)

    @property
    def vartheta(self) -> complex:
        return self.nu / self.p - 0.5

    @property
    def mb_amplitude(self) -> complex:
        """Leading amplitude of the inverse factorial expansion."""
        th = self.vartheta
        return ((2.0 * math.pi) ** -0.5
                * cmath.exp((0.5 - th) * math.log(self.kappa))
                * cmath.exp(-th * math.log(self.p)))


def big_x(p: float, x: complex) -> complex:
    """X = p**(1/(p+1)) x**(p/(p+1)), principal branch."""
    if x == 0:
        raise DomainError("x must be nonzero")
    return p ** (1.0 / (p + 1.0)) * cmath.exp(
        (p / (p + 1.0)) * cmath.log(x))


def _require_sector(x: complex, half_width: float, what: str) -> None:
    if x == 0 or abs(cmath.phase(x)) >= half_width:
        raise DomainError(f"{what} lies outside the validity sector")


def _psi_shift_coeffs(p: float, order: int, dtype=np.complex128) -> np.ndarray:
    """Taylor coefficients of psi(1+d) - psi(1), psi(t) = t**p/p + 1/t."""
    c = np.zeros(order + 1, dtype=dtype)
    binom = np.real(c.dtype.type(1))  # running C(p, j) in matching precision
    p_wide = binom * p
    sign = 1.0
    for j in range(1, order + 1):
        binom = binom * (p_wide - (j - 1)) / j
        sign = -sign
        c[j] = binom / p_wide + sign
    return c


def reversion_coefficients(shift_coeffs: np.ndarray) -> TruncatedSeries:
    """d(w) for w = sqrt(2 (f(1+d) - f(0-point))) given the Taylor shift.

    ``shift_coeffs`` are the Taylor coefficients of the exponent about its
    minimum (entries 0 and 1 must vanish).  The square-root branch is chosen
    with positive linear coefficient so that d tau / d w > 0 at the saddle.
    """
    order = len(shift_coeffs) - 1
    ratio = TruncatedSeries(2.0 * shift_coeffs[2:])  # 2 f / d^2, order-2
    w_over_d = ratio.power(0.5)
    w_of_d = w_over_d.shift(1)
    return w_of_d.revert()


@lru_cache(maxsize=256)
def _saddle_coeffs_cached(p: float, nu: complex, count: int) -> tuple:
    # The generator runs in extended precision: the high-order reversion
    # coefficients decay while the intermediates stay O(1), so plain doubles
    # would leave eps-scale absolute noise on ~1e-7 coefficients.
    m = 2 * count + 4  # guard terms against cancellation in the reversion
    shift = _psi_shift_coeffs(p, m, dtype=np.clongdouble)
    d_of_w = reversion_coefficients(shift)
    dtau_dw = d_of_w.derivative()
    tau = d_of_w + np.clongdouble(1.0)
    prod = tau.power(nu - 1.0) * dtau_dw
    even = prod.coeffs[0 : 2 * count + 1 : 2]
    scale = np.sqrt(np.longdouble(p) + 1.0)
    return tuple(complex(v) for v in scale * even)


def saddle_coefficients(p: float, nu: complex, count: int) -> np.ndarray:
    """Even-power coefficients of the saddle-point expansion, index 0..count.

    Entry 0 equals 1 by normalisation.  Generated numerically by reversion
    of the change of variable w**2/2 = psi(tau) - psi(1); the closed forms
    for the first two entries are exercised by the test suite only.
    """
    if p <= 0:
        raise DomainError("saddle coefficients require p > 0")
    if not 0 <= count <= _MAX_COEFFS:
        raise ValueError(f"count must lie in [0, {_MAX_COEFFS}]")
    return np.array(_saddle_coeffs_cached(float(p), complex(nu), int(count)))


def mb_coefficients(p: float, nu: complex, count: int) -> np.ndarray:
    """Inverse factorial coefficients c_j = (-1)^j (2 kappa)^j (1/2)_j B_j."""
    b = saddle_coefficients(p, nu, count)
    kappa = (p + 1.0) / p
    out = np.empty_like(b)
    factor = 1.0 + 0.0j
    for j in range(count + 1):
        out[j] = factor * b[j]
        factor *= -2.0 * kappa * (0.5 + j)
    return out


def expand_saddle(p: float, nu: complex, x: complex,
                  terms: int) -> ExpansionResult:
    """Steepest-descent expansion of the Kratzel integral for p > 0.

    Valid for |x| -> infinity in |arg x| < pi/2; ``terms`` is the truncation
    index (the highest coefficient used).
    """
    if p <= 0:
        raise DomainError("saddle expansion requires p > 0")
    _require_sector(complex(x), 0.5 * math.pi, "arg x")
    x = complex(x)
    nu = complex(nu)
    bx = big_x(p, x)
    b = saddle_coefficients(p, nu, terms)
    half = 0.5 * complex(bx)
    series_terms = []
    poch = 1.0 + 0.0j
    for k in range(terms + 1):
        series_terms.append(poch * b[k] / half ** k)
        poch *= 0.5 + k
    log_pref = (0.5 * (math.log(2.0 * math.pi) - cmath.log((p + 1.0) * bx))
                + (nu / (p + 1.0)) * cmath.log(x / p)
                - bx * (p + 1.0) / p)
    return make_result(cmath.exp(log_pref), series_terms)


def expand_mellin_barnes(p: float, nu: complex, x: complex,
                         terms: int) -> ExpansionResult:
    """Inverse factorial form of the p > 0 expansion.

    Algebraically identical to ``expand_saddle`` term by term; kept as an
    independent assembly route for cross-validation.
    """
    if p <= 0:
        raise DomainError("mellin-barnes expansion requires p > 0")
    x = complex(x)
    nu = complex(nu)
    bx = big_x(p, x)
    _require_sector(bx, 0.5 * math.pi, "arg X")
    params = KratzelParams(p=p, nu=nu, regime=Regime.POSITIVE)
    kappa = params.kappa
    theta = params.vartheta
    c = mb_coefficients(p, nu, terms)
    kx = kappa * bx
    series_terms = [(-1.0) ** j * c[j] * kx ** (-j) for j in range(terms + 1)]
    # the power prefactor is (kappa X)**theta: term-wise Mellin inversion of
    # Gamma(kappa s + theta - j) against (kappa X)**(-kappa s) leaves
    # (kappa X)**(theta - j), which the saddle-point route confirms
    log_pref = (math.log(2.0 * math.pi) + cmath.log(params.mb_amplitude)
                - math.log(kappa * p) + theta * cmath.log(kx) - kx)
    return make_result(cmath.exp(log_pref), series_terms)


def _gamma_weighted_sum(a: float, b: complex, z: complex) -> complex:
    """sum_k Gamma(a k + b) z**k / k! with term-ratio stopping.

    Raises LogarithmicCase when a gamma argument comes within 1e-10 of a
    non-positive integer, and ConvergenceError after 10^4 terms.
    """
    total = 0.0 + 0.0j
    zk = 1.0 + 0.0j
    quiet = 0
    for k in range(_MAX_TERMS):
        arg = a * k + b
        if near_nonpositive_integer(complex(arg), _LOG_POLE_TOL):
            raise LogarithmicCase(
                f"gamma argument {arg} hits a pole at term {k}")
        try:
            term = gamma(arg) * zk
        except OverflowError:
            term = complex("inf")
        if not (abs(term.real) < 1e250 and abs(term.imag) < 1e250):
            raise ConvergenceError(
                "gamma series terms overflow before convergence")
        total += term
        if abs(term) <= _SUM_RTOL * abs(total):
            quiet += 1
            if quiet >= 2:
                return total
        else:
            quiet = 0
        zk *= z / (k + 1.0)
    raise ConvergenceError("gamma series did not converge in 10^4 terms")


def wright_series(a: float, b: complex, z: complex) -> complex:
    """Wright function sum_k Gamma(a k + b) z**k / k! for 0 < a < 1."""
    if not 0.0 < a < 1.0:
        raise DomainError("wright series requires 0 < a < 1")
    return _gamma_weighted_sum(float(a), complex(b), complex(z))


def _series_small_x(p: float, nu: complex, x: complex) -> complex:
    """Gamma series in powers of x and x**p, convergent for p > 0."""
    s1 = _gamma_weighted_sum(-1.0 / p, nu / p, -x)
    xp = cmath.exp(p * cmath.log(x))
    s2 = _gamma_weighted_sum(-p, -nu, -xp)
    return s1 / p + cmath.exp(nu * cmath.log(x)) * s2


def _series_inverse_powers(p: float, nu: complex, x: complex) -> complex:
    """x**nu sum_k Gamma(-k p - nu) (-x**p)^k / k!  (p < 0)."""
    xp = cmath.exp(p * cmath.log(x))
    s = _gamma_weighted_sum(-p, -nu, -xp)
    return cmath.exp(nu * cmath.log(x)) * s


def _series_direct_powers(p: float, nu: complex, x: complex) -> complex:
    """-(1/p) sum_k Gamma((nu - k)/p) (-x)^k / k!  (p < 0)."""
    s = _gamma_weighted_sum(-1.0 / p, nu / p, -x)
    return -s / p


def convergent_series(p: float, nu: complex, x: complex) -> complex:
    """Convergent series value of the Kratzel integral, routed by regime.

    p > 0 uses the two-part gamma series in powers of x and x**p; for
    -1 <= p < 0 the series in powers of x**p applies, and for p <= -1 the
    series in powers of x.  At p = -1 both reduce to the same binomial
    closed form but converge on complementary sides of |x| = 1, so the
    route is picked by |x| there.
    """
    params = KratzelParams.make(p, nu)
    x = complex(x)
    if x == 0:
        raise DomainError("x must be nonzero")
    if params.regime is Regime.POSITIVE:
        return _series_small_x(params.p, params.nu, x)
    if params.regime is Regime.ZERO:
        raise DomainError("p = 0 has no series route; use the closed form")
    if params.regime is Regime.BETWEEN_NEG_ONE_AND_ZERO:
        return _series_inverse_powers(params.p, params.nu, x)
    if params.regime is Regime.NEG_ONE:
        if abs(x) > 1.0:
            return _series_inverse_powers(params.p, params.nu, x)
        if abs(x) < 1.0:
            return _series_direct_powers(params.p, params.nu, x)
        raise ConvergenceError("p = -1 series diverge on |x| = 1")
    return _series_direct_powers(params.p, params.nu, x)


def expand_negative_p(p: float, nu: complex, x: complex,
                      terms: int) -> ExpansionResult:
    """Partial sums of the large-x expansion for p < 0 (Re nu < 0).

    For -1 <= p < 0 the same sum is convergent; for p <= -1 it is
    asymptotic only.
    """
    params = KratzelParams.make(p, nu)
    if params.regime is Regime.POSITIVE or params.regime is Regime.ZERO:
        raise DomainError("negative-p expansion requires p < 0")
    x = complex(x)
    if x == 0:
        raise DomainError("x must be nonzero")
    sector = abs((p + 1.0) * math.pi / (2.0 * p))
    arg = abs(cmath.phase(x))
    if arg > 0 and arg >= sector:
        raise DomainError("arg x lies outside the validity sector")
    xp = cmath.exp(p * cmath.log(x))
    series_terms = []
    zk = 1.0 + 0.0j
    for k in range(terms + 1):
        series_terms.append(gamma(-k * p - nu) * zk)
        zk *= -xp / (k + 1.0)
    prefactor = cmath.exp(nu * cmath.log(x))
    return make_result(prefactor, series_terms)
