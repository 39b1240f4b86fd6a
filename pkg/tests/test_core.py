import cmath
import math

import numpy as np
import pytest

from kratzel.core import bessel_k_scaled, bessel_k_scaled_many, gamma, pochhammer
from kratzel.errors import DomainError, PoleError


def rel(a, b):
    return abs(complex(a) / complex(b) - 1.0)


def test_gamma_classical_values():
    assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-13
    assert rel(gamma(1.0), 1.0) < 1e-14
    # reflection value, cross-checked by hand via Gamma(2.5)/((-1.5)(-0.5))
    assert rel(gamma(-1.5), 2.3632718012073547) < 1e-13


def test_gamma_against_stdlib_real_axis():
    for z in np.linspace(0.1, 50.0, 97):
        assert rel(gamma(z), math.gamma(z)) < 1e-13


def test_gamma_recurrence():
    rng = np.random.default_rng(101)
    checked = 0
    while checked < 100:
        z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if z.real < 0.5 and abs(z - round(z.real)) < 0.05:
            continue
        if abs(z + 1 - round(z.real + 1)) < 0.05 and z.real < -0.5:
            continue
        assert rel(gamma(z + 1), z * gamma(z)) < 1e-12
        checked += 1


def test_gamma_reflection_identity():
    rng = np.random.default_rng(7)
    for _ in range(60):
        z = complex(rng.uniform(-10, 10), rng.uniform(-3, 3))
        if abs(z.real - round(z.real)) < 0.1 and abs(z.imag) < 0.1:
            continue
        lhs = gamma(z) * gamma(1.0 - z) * cmath.sin(math.pi * z) / math.pi
        assert abs(lhs - 1.0) < 1e-11


def test_gamma_pole_error():
    for z in (0.0, -1.0, -7.0, -3.0 + 1e-13):
        with pytest.raises(PoleError):
            gamma(z)


def test_pochhammer_basic():
    assert pochhammer(0.5, 0) == 1.0
    assert rel(pochhammer(0.5, 2), 0.75) < 1e-15
    # (-1/2)(1/2)(3/2) by hand
    assert rel(pochhammer(-0.5, 3), -0.375) < 1e-15


def test_pochhammer_gamma_ratio():
    rng = np.random.default_rng(11)
    for _ in range(40):
        a = complex(rng.uniform(0.2, 8.0), rng.uniform(-2, 2))
        k = int(rng.integers(0, 12))
        assert rel(pochhammer(a, k), gamma(a + k) / gamma(a)) < 1e-11


def _k_half_integer_reference(order_index: int, z: float) -> float:
    """Scaled K of order 1/2, 3/2, 5/2 by the forward order recurrence."""
    k_minus = math.sqrt(math.pi / (2 * z))          # order 1/2
    k_plus = k_minus * (1.0 + 1.0 / z)              # order 3/2
    refs = [k_minus, k_plus]
    for m in range(2, order_index + 1):
        mu = m - 0.5
        refs.append(refs[m - 2] + (2 * mu / z) * refs[m - 1])
    return refs[order_index]


@pytest.mark.parametrize("idx", [0, 1, 2])
def test_bessel_half_integer_closed_forms(idx):
    for z in (0.5, 2.0, 17.0, 1e3):
        ref = _k_half_integer_reference(idx, z)
        assert rel(bessel_k_scaled(idx + 0.5, z), ref) < 1e-11


def test_bessel_order_symmetry():
    assert bessel_k_scaled(4.0 / 3.0, 2.0) == bessel_k_scaled(-4.0 / 3.0, 2.0)


def test_bessel_brute_force_trapezoid_oracle():
    # argument 2 sqrt(p x) for p=1, x=500; fixed-step trapezoid of the
    # cosh-form integrand, independent of the adaptive driver
    nu, z = 4.0 / 3.0, 2.0 * math.sqrt(500.0)
    h = 1e-4
    u = np.arange(1, int(2.0 / h)) * h
    vals = np.exp(-z * (np.cosh(u) - 1.0)) * np.cosh(nu * u)
    brute = h * (0.5 + vals.sum())
    assert rel(bessel_k_scaled(nu, z), brute) < 1e-11


def test_bessel_many_matches_scalar():
    zs = np.array([0.7, 3.0, 44.721, 2000.0])
    many = bessel_k_scaled_many(1.25, zs)
    for z, v in zip(zs, many):
        assert rel(bessel_k_scaled(1.25, z), v) < 1e-13


def test_bessel_domain_errors():
    with pytest.raises(DomainError):
        bessel_k_scaled(0.5, 0.0)
    with pytest.raises(DomainError):
        bessel_k_scaled(0.5, complex(1.0, 1.1))  # arg z > pi/4
    with pytest.raises(DomainError):
        bessel_k_scaled(0.5, -3.0)
