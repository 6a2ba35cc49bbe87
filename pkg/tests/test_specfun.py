import math

import numpy as np
import pytest

from doublecone import specfun as sf
from doublecone.errors import DoubleConeError, PoleError


@pytest.mark.parametrize("x, want", [(1.0, 1.0), (0.5, math.sqrt(math.pi)), (5.0, 24.0)])
def test_gamma(x, want):
    assert sf.gamma_fn(x) == pytest.approx(want, rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        sf.gamma_fn(x)


def test_bessel_examples():
    assert sf.bessel_j(0.0, 0.0) == 1.0
    assert abs(sf.bessel_j(0.5, math.pi)) < 1e-15
    assert sf.bessel_j(-0.5, math.pi / 3) == pytest.approx(math.sqrt(6 / math.pi**2) * 0.5, rel=1e-13)
    assert sf.bessel_j(-0.5, math.pi / 3) == pytest.approx(0.3898484, abs=1e-7)


def test_bessel_reference_values():
    # 30-digit mpmath values
    assert sf.bessel_j(0, 1.0) == pytest.approx(0.7651976865579666, rel=1e-14)
    assert sf.bessel_j(1, 10.0) == pytest.approx(0.04347274616886144, rel=1e-12)
    assert sf.bessel_j(2.5, 25.0) == pytest.approx(0.0020381361533260554, rel=1e-11)


def test_bessel_negative_integer_reflection():
    for x in (0.3, 4.0, 17.0):
        assert sf.bessel_j(-3, x) == pytest.approx(-sf.bessel_j(3, x), rel=1e-13)


def test_bessel_array_broadcast():
    out = sf.bessel_j(0.5, np.array([1.0, 2.0]))
    assert out.shape == (2,)
    assert out[1] == pytest.approx(math.sqrt(2 / (2 * math.pi)) * math.sin(2.0), rel=1e-14)


def test_bessel_small_argument_limit():
    for nu in (0.0, 0.5, 1.7, 4.0):
        lead = (5e-7) ** nu / math.gamma(nu + 1)
        assert sf.bessel_j(nu, 1e-6) == pytest.approx(lead, rel=1e-11)


def test_bessel_rejects_negative_x():
    with pytest.raises(DoubleConeError):
        sf.bessel_j(0.5, -1.0)


@pytest.mark.parametrize("a, b, z, want", [(0, 2, 5, 1.0), (-1, 2, 3, -0.5), (-2, 1, 1, -0.5)])
def test_kummer_examples(a, b, z, want):
    assert sf.kummer_m(a, b, z) == pytest.approx(want, rel=1e-15)
    assert sf.kummer_m(sf.KummerParams(a, b, z)) == pytest.approx(want, rel=1e-15)


def test_kummer_nonterminating():
    # M(1, 1; z) = e^z and M(1, 2; z) = (e^z - 1)/z
    assert sf.kummer_m(1.0, 1.0, 3.0) == pytest.approx(math.exp(3.0), rel=1e-13)
    assert sf.kummer_m(1.0, 2.0, -2.0) == pytest.approx((math.exp(-2.0) - 1) / -2.0, rel=1e-13)


def test_kummer_pole():
    with pytest.raises(PoleError):
        sf.kummer_m(1.0, -2.0, 1.0)


@pytest.mark.parametrize("n, a, z, want", [(0, 0, 7, 1.0), (1, 0, 2, -1.0), (2, 1, 1, 0.5)])
def test_laguerre_examples(n, a, z, want):
    assert sf.laguerre(n, a, z) == pytest.approx(want, rel=1e-15)


def test_kummer_laguerre_example():
    assert sf.kummer_m(-2, 1, 1.0) == pytest.approx(sf.laguerre(2, 0, 1.0) / sf.laguerre_binomial(2, 0), rel=1e-15)


@pytest.mark.parametrize("nu, x, want", [
    # 50-digit mpmath values; orders a few ulp away from a negative integer
    (-8.999999999999998, 0.5, 1.8922793080032017e-05),
    (-7.999999999999998, 0.5, -5.9162348814832041e-07),
])
def test_bessel_near_negative_integer_order(nu, x, want):
    assert sf.bessel_j(nu, x) == pytest.approx(want, rel=1e-13)
