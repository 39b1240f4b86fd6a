"""Arithmetic on truncated formal power series.

The coefficient generators for the asymptotic expansions all reduce to a
handful of operations on dense truncated series: ring arithmetic, general
powers of a unit series, exp, composition, and functional reversion.
Coefficients are stored as complex doubles throughout so that one code path
serves both real parameters and the complex prefactors of the large-order
expansion.  Instances are immutable.
"""
from __future__ import annotations

import numpy as np

from .errors import NotInvertible, ZeroConstantTerm

_C0_TOL = 1e-14  # reversion precondition: the construction guarantees c0 = 0


class TruncatedSeries:
    """c[0] + c[1] w + ... + c[N] w**N with exact truncated-ring arithmetic.

    Binary operations truncate to the smaller operand order.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        arr = np.asarray(coeffs)
        dtype = np.result_type(arr.dtype, np.complex128)
        c = np.array(arr, dtype=dtype).ravel()
        if c.size == 0:
            raise ValueError("series needs at least the constant coefficient")
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            out = np.zeros(order + 1, dtype=dtype)
            n = min(c.size, order + 1)
            out[:n] = c[:n]
            c = out
        self._c = c
        self._c.setflags(write=False)

    @classmethod
    def identity(cls, order: int, dtype=np.complex128) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=dtype)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._c.tolist()!r})"

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return None
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            c = self._c.copy()
            c[0] += other
            return TruncatedSeries(c)
        n = min(self.order, o.order)
        return TruncatedSeries(self._c[: n + 1] + o._c[: n + 1])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            c = self._c.copy()
            c[0] -= other
            return TruncatedSeries(c)
        n = min(self.order, o.order)
        return TruncatedSeries(self._c[: n + 1] - o._c[: n + 1])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return TruncatedSeries(self._c * other)
        n = min(self.order, o.order)
        full = np.convolve(self._c[: n + 1], o._c[: n + 1])
        return TruncatedSeries(full[: n + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries(self._c / other)
        return NotImplemented

    def power(self, alpha: complex) -> "TruncatedSeries":
        """General power of a series with nonzero constant term.

        Uses the standard recurrence obtained from h' f = alpha f' h, which
        amounts to c0**alpha * exp(alpha log(f/c0)) without forming the log.
        """
        f = self._c
        if abs(f[0]) == 0.0:
            raise ZeroConstantTerm("series power requires c0 != 0")
        n = self.order
        h = np.zeros(n + 1, dtype=f.dtype)
        h[0] = f[0] ** alpha
        for m in range(1, n + 1):
            acc = f.dtype.type(0)
            for k in range(1, m + 1):
                acc += (alpha * k - (m - k)) * f[k] * h[m - k]
            h[m] = acc / (m * f[0])
        return TruncatedSeries(h)

    def exp(self) -> "TruncatedSeries":
        """Exponential of the series (constant term folded analytically)."""
        f = self._c
        n = self.order
        h = np.zeros(n + 1, dtype=f.dtype)
        h[0] = np.exp(f[0])
        for m in range(1, n + 1):
            acc = f.dtype.type(0)
            for k in range(1, m + 1):
                acc += k * f[k] * h[m - k]
            h[m] = acc / m
        return TruncatedSeries(h)

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries([0.0])
        n = np.arange(1, self.order + 1)
        return TruncatedSeries(self._c[1:] * n)

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by w**k, keeping the truncation order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        c = np.zeros(self.order + 1, dtype=self._c.dtype)
        if k <= self.order:
            c[k:] = self._c[: self.order + 1 - k]
        return TruncatedSeries(c)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(w)) truncated to min(orders); inner must have c0 = 0."""
        if abs(inner._c[0]) > _C0_TOL:
            raise ValueError("composition requires inner constant term = 0")
        n = min(self.order, inner.order)
        g = TruncatedSeries(inner._c[: n + 1])
        out = TruncatedSeries([self._c[n]], order=n)
        for k in range(n - 1, -1, -1):
            out = out * g + self._c[k]
        return out

    def revert(self) -> "TruncatedSeries":
        """Functional inverse: returns b with b(self(w)) = w through order N.

        Newton iteration on series composition, doubling the number of
        correct coefficients each step.  Requires c0 = 0 (within 1e-14)
        and c1 != 0; the linear coefficient of the result is exactly 1/c1.
        """
        a = self._c
        if abs(a[0]) > _C0_TOL:
            raise NotInvertible("reversion requires c0 = 0")
        if self.order < 1 or abs(a[1]) < 1e-300:
            raise NotInvertible("reversion requires c1 != 0")
        n = self.order
        aa = TruncatedSeries(a)
        da = aa.derivative()
        ident = TruncatedSeries.identity(n, dtype=a.dtype)
        seed = np.zeros(n + 1, dtype=a.dtype)
        seed[1] = 1.0 / a[1]
        g = TruncatedSeries(seed)
        correct = 1
        while correct < n:
            resid = aa.compose(g) - ident
            slope = TruncatedSeries(da._c, order=n).compose(g)
            g = g - resid * slope.power(-1.0)
            correct *= 2
        c = g._c.copy()
        c[0] = 0.0
        c[1] = 1.0 / a[1]
        return TruncatedSeries(c)
