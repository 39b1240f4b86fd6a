import numpy as np
import pytest

from kratzel.errors import NotInvertible, ZeroConstantTerm
from kratzel.series import TruncatedSeries


def coeffs(s):
    return np.asarray(s.coeffs, dtype=np.complex128)


def test_ring_arithmetic():
    one_plus = TruncatedSeries([1, 1, 0])
    one_minus = TruncatedSeries([1, -1, 0])
    np.testing.assert_allclose(coeffs(one_plus * one_minus), [1, 0, -1])
    np.testing.assert_allclose(
        coeffs(TruncatedSeries([1, 1]) + TruncatedSeries([-1, 1])), [0, 2])
    np.testing.assert_allclose(
        coeffs(TruncatedSeries([1, 2, 3]) - TruncatedSeries([1, 1, 1])),
        [0, 1, 2])


def test_truncation_to_smaller_order():
    a = TruncatedSeries([1, 1, 1, 1, 1])
    b = TruncatedSeries([1, 1])
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_psi_factor_product_for_quadratic_exponent():
    # Taylor shift of t^2/2 + 1/t about t=1: 3/2 d^2 - d^3 + d^4 - ...
    # built as the product of the two elementary factor expansions
    n = 4
    # (1+d)^2/2 exactly
    quad = TruncatedSeries([0.5, 1.0, 0.5], order=n)
    inv = TruncatedSeries([1, 1], order=n).power(-1.0)  # 1/(1+d)
    total = quad + inv - 1.5
    np.testing.assert_allclose(coeffs(total), [0, 0, 1.5, -1.0, 1.0],
                               atol=1e-14)


def test_power_binomial():
    np.testing.assert_allclose(
        coeffs(TruncatedSeries([1, 1, 0]).power(2)), [1, 2, 1], atol=1e-15)
    np.testing.assert_allclose(
        coeffs(TruncatedSeries([1, 1, 0]).power(0.5)), [1, 0.5, -0.125],
        atol=1e-15)


def test_power_inverse_multiplies_back():
    s = TruncatedSeries([1, 1, 1])
    inv = s.power(-1.0)
    np.testing.assert_allclose(coeffs(inv), [1, -1, 0], atol=1e-14)
    np.testing.assert_allclose(coeffs(s * inv), [1, 0, 0], atol=1e-14)


def test_power_requires_unit():
    with pytest.raises(ZeroConstantTerm):
        TruncatedSeries([0, 1]).power(0.5)


def test_power_pair_cancels():
    rng = np.random.default_rng(3)
    for _ in range(20):
        c = rng.uniform(-1, 1, 13) + 1j * rng.uniform(-1, 1, 13)
        c[0] = 1.0 + 0.5j
        s = TruncatedSeries(c)
        alpha = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
        prod = s.power(alpha) * s.power(-alpha)
        target = np.zeros(13, complex)
        target[0] = 1.0
        assert np.max(np.abs(coeffs(prod) - target)) < 1e-10


def test_mul_commutative_associative():
    rng = np.random.default_rng(5)
    a = TruncatedSeries(rng.uniform(-1, 1, 10))
    b = TruncatedSeries(rng.uniform(-1, 1, 10))
    c = TruncatedSeries(rng.uniform(-1, 1, 10))
    np.testing.assert_allclose(coeffs(a * b), coeffs(b * a), atol=1e-13)
    np.testing.assert_allclose(coeffs((a * b) * c), coeffs(a * (b * c)),
                               atol=1e-13)


def test_revert_fixed_points():
    np.testing.assert_allclose(
        coeffs(TruncatedSeries([0, 1, 0]).revert()), [0, 1, 0], atol=1e-15)
    np.testing.assert_allclose(
        coeffs(TruncatedSeries([0, 2, 0]).revert()), [0, 0.5, 0], atol=1e-15)


def test_revert_catalan():
    # inverse of w - w^2 starts the Catalan numbers
    r = TruncatedSeries([0, 1, -1, 0]).revert()
    np.testing.assert_allclose(coeffs(r), [0, 1, 1, 2], atol=1e-13)


def test_revert_preconditions():
    with pytest.raises(NotInvertible):
        TruncatedSeries([1e-3, 1.0]).revert()
    with pytest.raises(NotInvertible):
        TruncatedSeries([0.0, 0.0, 1.0]).revert()


def test_revert_round_trip_random():
    # scaled unit series keep the round trip well conditioned: |c1| spans
    # [0.1, 10] while the higher coefficients stay proportional to it
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(50):
        scale = 10.0 ** rng.uniform(-1, 1)
        f = rng.uniform(-0.5, 0.5, 13) + 1j * rng.uniform(-0.5, 0.5, 13)
        f[0] = 0.0
        f[1] = 1.0
        a = TruncatedSeries(scale * f)
        ident = a.revert().compose(a)
        target = np.zeros(13, complex)
        target[1] = 1.0
        worst = max(worst, np.max(np.abs(coeffs(ident) - target)))
    assert worst < 1e-9


def test_exp_and_derivative():
    e = TruncatedSeries([0, 1], order=5).exp()
    np.testing.assert_allclose(
        coeffs(e).real, [1, 1, 0.5, 1 / 6, 1 / 24, 1 / 120], atol=1e-15)
    d = TruncatedSeries([3, 2, 5]).derivative()
    np.testing.assert_allclose(coeffs(d), [2, 10])


def test_immutability():
    s = TruncatedSeries([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5.0
