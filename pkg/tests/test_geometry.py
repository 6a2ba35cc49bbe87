import math

import numpy as np
import pytest

from doublecone import geometry as geo
from doublecone.errors import ApexError, DoubleConeError


@pytest.mark.parametrize("alpha, l, diag", [
    (1.0, 1.0, (-1, 1, 1)),
    (0.7, 2.0, (-1, 1, 1.96)),
    (0.5, -3.0, (-1, 1, 2.25)),
])
def test_metric_components(alpha, l, diag):
    g = geo.metric_components(geo.SurfaceGeometry(alpha), l)
    np.testing.assert_allclose(g, np.diag(diag), rtol=1e-15, atol=0)


def test_metric_scales_with_c():
    g = geo.metric_components(geo.SurfaceGeometry(1.0), 1.0, geo.UnitSystem(c=3.0))
    assert g[0, 0] == -9.0


def test_inverse_triad():
    np.testing.assert_array_equal(geo.inverse_triad(geo.SurfaceGeometry(1.0), 1.0), np.eye(3))
    np.testing.assert_allclose(geo.inverse_triad(geo.SurfaceGeometry(0.5), 4.0), np.diag([1, 1, 0.5]))


def test_apex_raises():
    with pytest.raises(ApexError):
        geo.inverse_triad(geo.SurfaceGeometry(0.7), 0.0)
    with pytest.raises(ApexError):
        geo.verify_metric_reconstruction(geo.SurfaceGeometry(0.7), 0.0)


def test_triads_are_inverse():
    g = geo.SurfaceGeometry(0.3)
    np.testing.assert_allclose(geo.direct_triad(g, -2.5) @ geo.inverse_triad(g, -2.5), np.eye(3), atol=1e-16)


@pytest.mark.parametrize("alpha, l", [(1.0, 1.0), (0.7, 2.5), (0.3, -1.0)])
def test_metric_reconstruction(alpha, l):
    assert geo.verify_metric_reconstruction(geo.SurfaceGeometry(alpha), l) <= 1e-15


@pytest.mark.parametrize("alpha", [1.0, 0.7, 0.25])
def test_connections(alpha):
    g = geo.SurfaceGeometry(alpha)
    assert geo.spin_connection_coefficient(g) == alpha
    assert geo.spinorial_connection_coefficient(g) == -alpha / 2


def test_spinorial_vanishes_for_thin_cone():
    assert abs(geo.spinorial_connection_coefficient(geo.SurfaceGeometry(1e-300))) < 1e-299


@pytest.mark.parametrize("alpha, B0, l, want", [
    (1.0, 1.0, 2.0, 1.0),
    (0.3, 0.0, 5.0, 0.0),
    (0.5, 1.0, -2.0, 0.5),
])
def test_vector_potential(alpha, B0, l, want):
    assert geo.vector_potential(geo.SurfaceGeometry(alpha), B0, l) == pytest.approx(want, rel=1e-15)


@pytest.mark.parametrize("alpha, B0, l, want", [
    (1.0, 1.0, 1.0, math.pi),
    (0.6, 0.0, 3.0, 0.0),
    (0.7, 2.0, 3.0, 8.82 * math.pi),
])
def test_flux(alpha, B0, l, want):
    g = geo.SurfaceGeometry(alpha)
    assert geo.flux_through_loop(g, B0, l) == pytest.approx(want, rel=1e-14)
    assert geo.flux_through_loop(g, B0, l) == pytest.approx(geo.projected_disc_flux(g, B0, l), rel=1e-14)


def test_invalid_inputs():
    for bad in (0.0, -0.5, 1.5, float("nan")):
        with pytest.raises(DoubleConeError):
            geo.SurfaceGeometry(bad)
    with pytest.raises(DoubleConeError):
        geo.UnitSystem(hbar=0.0)
    with pytest.raises(DoubleConeError):
        geo.vector_potential(geo.SurfaceGeometry(1.0), -1.0, 1.0)


def test_nappe_label():
    assert geo.nappe(2.0) == 1 and geo.nappe(-0.1) == -1
