"""High-accuracy quadrature of the three integrals, used as ground truth.

The Kratzel integral is integrated in exponential variables on the real
line; the (0,1) Bessel-kernel integrals use tanh-sinh nodes.  Both inherit
the step-halving self-convergence criterion of the DE drivers, so a value
that comes back has passed the "halving changes less than rel_tol" check.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._de import tanh_sinh_unit, trapezoid_line
from .core import bessel_k_scaled_many
from .errors import DomainError
from .expansions import big_x

_EXP_FLOOR = -745.0  # below this the double-precision exponential is zero


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and refinement budget for the DE rules."""

    rel_tol: float = 1e-12
    max_level: int = 12
    initial_step: float = 0.5

    def __post_init__(self):
        if not 1e-15 < self.rel_tol < 1e-2:
            raise ValueError("rel_tol must lie in (1e-15, 1e-2)")
        if self.max_level > 16 or self.max_level < 1:
            raise ValueError("max_level must lie in [1, 16]")
        if self.initial_step <= 0:
            raise ValueError("initial_step must be positive")


_DEFAULT = QuadratureConfig()


def kratzel_quadrature(p: float, nu: complex, x: complex,
                       cfg: QuadratureConfig = _DEFAULT) -> complex:
    """Direct evaluation of the Kratzel integral.

    For p > 0 the scaled tau-form is integrated along the positive real
    axis, which stays valid for complex x with |arg X| < pi/2.  For p <= 0
    the defining integral is used with t = e^u (Re nu < 0, Re x > 0); by
    convention the t**p factor in the exponent is absent at p = 0, matching
    the closed form x**nu Gamma(-nu).
    """
    p = float(p)
    nu = complex(nu)
    x = complex(x)
    if x == 0:
        raise DomainError("x must be nonzero")
    if p > 0:
        bx = big_x(p, x)
        if abs(cmath.phase(bx)) >= 0.5 * math.pi:
            raise DomainError("arg X lies outside the convergence sector")

        def integrand(u: np.ndarray) -> np.ndarray:
            dead = (p * u > 700.0) | (u < -700.0)
            with np.errstate(over="ignore", under="ignore", invalid="ignore"):
                expo = nu * u - bx * (np.exp(p * u) / p + np.exp(-u))
                vals = np.exp(expo)
            return np.where(dead, 0.0, vals)

        total = trapezoid_line(integrand, step=cfg.initial_step,
                               rel_tol=cfg.rel_tol, max_level=cfg.max_level)
        return cmath.exp((nu / (p + 1.0)) * cmath.log(x / p)) * total

    if nu.real >= 0:
        raise DomainError("p <= 0 requires Re(nu) < 0")
    if x.real <= 0:
        raise DomainError("p <= 0 requires Re(x) > 0")

    def integrand(u: np.ndarray) -> np.ndarray:
        dead = (-p * u > 700.0) | (u < -700.0)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            expo = nu * u - x * np.exp(-u)
            if p != 0:
                expo = expo - np.exp(p * u)
            vals = np.exp(expo)
        return np.where(dead, 0.0, vals)

    return trapezoid_line(integrand, step=cfg.initial_step,
                          rel_tol=cfg.rel_tol, max_level=cfg.max_level)


def whittaker_i_quadrature(a: float, b: float, z: complex, p: float,
                           nu: float,
                           cfg: QuadratureConfig = _DEFAULT) -> complex:
    """Bessel-kernel integral over (0,1) by tanh-sinh quadrature.

    The kernel argument p/(t(1-t)) blows up at the endpoints, so the power
    factors, e^{zt} and the kernel's exponential decay are assembled in one
    log-space exponent; nodes whose exponent underflows contribute exactly
    zero and skip the Bessel evaluation.
    """
    if p <= 0:
        raise DomainError("kernel scale p must be positive")
    if nu < -0.5:
        raise DomainError("kernel order nu must be >= -1/2")
    z = complex(z)
    amp = math.sqrt(2.0 * p / math.pi)
    inner_tol = max(cfg.rel_tol * 0.05, 2e-15)

    def g(x, omx, logx, logomx):
        log_zeta = math.log(p) - logx - logomx
        alive = log_zeta < 700.0
        zeta = np.exp(np.where(alive, log_zeta, 0.0))
        expo = (a + 0.5) * logx + (b + 0.5) * logomx + z * x
        expo = expo - np.where(alive, zeta, np.inf)
        alive &= expo.real > _EXP_FLOOR
        out = np.zeros(x.shape, dtype=np.complex128)
        if np.any(alive):
            kv = bessel_k_scaled_many(nu, zeta[alive], rel_tol=inner_tol)
            out[alive] = amp * kv * np.exp(expo[alive])
        return out

    return tanh_sinh_unit(g, step=cfg.initial_step, rel_tol=cfg.rel_tol,
                          max_level=cfg.max_level)


def whittaker_j_quadrature(a: float, b: float, z: complex, p: float,
                           cfg: QuadratureConfig = _DEFAULT) -> complex:
    """Scalar-kernel integral over (0,1): t^a (1-t)^b e^{zt} e^{-p/(t(1-t))}.

    The kernel exponent is taken with the minus sign, the only choice that
    decays at the endpoints for p > 0 and reproduces the documented
    large-argument behaviour.
    """
    if p <= 0:
        raise DomainError("kernel scale p must be positive")
    z = complex(z)

    def g(x, omx, logx, logomx):
        log_zeta = math.log(p) - logx - logomx
        alive = log_zeta < 700.0
        zeta = np.exp(np.where(alive, log_zeta, 0.0))
        expo = (a + 1.0) * logx + (b + 1.0) * logomx + z * x
        expo = expo - np.where(alive, zeta, np.inf)
        alive &= expo.real > _EXP_FLOOR
        return np.where(alive, np.exp(np.where(alive, expo, 0.0)), 0.0)

    return tanh_sinh_unit(g, step=cfg.initial_step, rel_tol=cfg.rel_tol,
                          max_level=cfg.max_level)
