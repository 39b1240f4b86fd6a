"""Double-exponential quadrature drivers.

All integrals in this package reduce to trapezoidal sums over the real line
in a transformed variable where the integrand decays (double-)exponentially.
The drivers here evaluate integrands on numpy arrays of abscissae, expand the
truncation range until tail blocks are negligible, and halve the step until
two successive levels agree.  A successful return therefore carries the
self-convergence property (halving the step changes the result by less than
``rel_tol``) by construction.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import ConvergenceError

_BLOCK = 64              # nodes per tail-scan block
_CHUNK = 2048            # nodes per interior refinement chunk
_TAIL_RTOL = 1e-17       # block cutoff relative to the running sum
_MAX_SIDE_NODES = 2_000_000
_TINY = 1e-300

Integrand = Callable[[np.ndarray], np.ndarray]


def _check_finite(vals: np.ndarray) -> None:
    if not np.all(np.isfinite(vals)):
        raise ConvergenceError("integrand returned non-finite values")


def _scan_side(f: Integrand, h: float, sign: float, k0: int,
               scale: np.ndarray) -> tuple[np.ndarray, int]:
    """Sum f over nodes sign*k*h for k >= k0 until blocks are negligible.

    Returns the per-integral sums and the first unsampled index.
    ``scale`` holds per-integral magnitude references and is updated in place.
    """
    total = np.zeros(scale.shape[0], dtype=np.complex128)
    k = k0
    quiet = 0
    while True:
        ks = np.arange(k, k + _BLOCK, dtype=np.float64)
        vals = f(sign * h * ks)
        _check_finite(vals)
        total += vals.sum(axis=1)
        block_abs = np.abs(vals).sum(axis=1)
        k += _BLOCK
        np.maximum(scale, np.abs(total), out=scale)
        if np.all(block_abs <= _TAIL_RTOL * scale):
            quiet += 1
            if quiet >= 2:
                return total, k
        else:
            quiet = 0
        if k - k0 > _MAX_SIDE_NODES:
            raise ConvergenceError(
                "integrand decays too slowly for the range scan")


def _sum_odd(f: Integrand, h: float, sign: float, k_max: int,
             scale: np.ndarray) -> np.ndarray:
    """Sum f over nodes sign*k*h for odd k < k_max."""
    total = np.zeros(scale.shape[0], dtype=np.complex128)
    for start in range(1, k_max, 2 * _CHUNK):
        ks = np.arange(start, min(start + 2 * _CHUNK, k_max), 2,
                       dtype=np.float64)
        vals = f(sign * h * ks)
        _check_finite(vals)
        total += vals.sum(axis=1)
    np.maximum(scale, np.abs(total), out=scale)
    return total


def trapezoid_line_multi(f: Integrand, n_out: int, *, step: float = 0.5,
                         rel_tol: float = 1e-12, max_level: int = 12,
                         min_level: int = 2) -> np.ndarray:
    """Trapezoidal sums of ``n_out`` integrals over the whole real line.

    ``f`` maps an array of m abscissae to an (n_out, m) array of values.
    All integrals share one grid; convergence requires every component to
    stabilise.  Raises ConvergenceError when ``max_level`` halvings do not
    reach ``rel_tol``.
    """
    h = float(step)
    scale = np.full(n_out, _TINY)
    center = f(np.zeros(1))
    _check_finite(center)
    total = center[:, 0].copy()
    np.maximum(scale, np.abs(total), out=scale)
    pos, kp = _scan_side(f, h, +1.0, 1, scale)
    neg, kn = _scan_side(f, h, -1.0, 1, scale)
    total += pos + neg
    value = h * total
    for level in range(1, max_level + 1):
        h *= 0.5
        kp *= 2
        kn *= 2
        total += _sum_odd(f, h, +1.0, kp, scale)
        total += _sum_odd(f, h, -1.0, kn, scale)
        ext, kp = _scan_side(f, h, +1.0, kp, scale)
        total += ext
        ext, kn = _scan_side(f, h, -1.0, kn, scale)
        total += ext
        new_value = h * total
        if level >= min_level:
            err = np.abs(new_value - value)
            ref = np.maximum(np.abs(new_value), np.abs(value))
            if np.all(err <= np.maximum(rel_tol * ref, _TINY)):
                return new_value
        value = new_value
    raise ConvergenceError(
        f"no convergence to rel_tol={rel_tol:g} within {max_level} levels")


def trapezoid_line(f: Callable[[np.ndarray], np.ndarray], *, step: float = 0.5,
                   rel_tol: float = 1e-12, max_level: int = 12) -> complex:
    """Trapezoidal sum over the real line of a scalar integrand.

    ``f`` maps an array of abscissae to an equally shaped array of values.
    """
    def wrapped(u: np.ndarray) -> np.ndarray:
        return np.asarray(f(u), dtype=np.complex128).reshape(1, -1)

    out = trapezoid_line_multi(wrapped, 1, step=step, rel_tol=rel_tol,
                               max_level=max_level)
    return complex(out[0])


def tanh_sinh_unit(g: Callable[..., np.ndarray], *, step: float = 0.5,
                   rel_tol: float = 1e-12, max_level: int = 12) -> complex:
    """Tanh-sinh quadrature over (0, 1).

    ``g(x, omx, logx, logomx)`` must return ``integrand(x) * x * (1 - x)``;
    the x(1-x) factor is part of the node weight here and lets the caller
    absorb endpoint power singularities in log space.  ``omx`` is ``1 - x``
    computed without cancellation, and ``logx``/``logomx`` are the accurate
    logarithms of ``x`` and ``1 - x``.
    """
    c = 0.5 * math.pi

    def node_values(t: np.ndarray) -> np.ndarray:
        arg = 2.0 * c * np.sinh(t)
        logx = -np.logaddexp(0.0, -arg)
        logomx = -np.logaddexp(0.0, arg)
        x = np.exp(logx)
        omx = np.exp(logomx)
        return 2.0 * c * np.cosh(t) * g(x, omx, logx, logomx)

    return trapezoid_line(node_values, step=step, rel_tol=rel_tol,
                          max_level=max_level)
