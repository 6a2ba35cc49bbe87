"""Property tests for the invariants listed per module."""
import math

from hypothesis import given, settings
from hypothesis import strategies as st

from doublecone import free_dynamics as fd
from doublecone import geometry as geo
from doublecone import landau as ld
from doublecone import specfun as sf

alphas = st.floats(1e-6, 1.0)
signs = st.sampled_from([-1, 1])
mags = st.floats(1e-6, 1e6)
fields = st.floats(1e-3, 1e3)
real_j = st.floats(-50, 50, allow_nan=False)


@settings(max_examples=500, deadline=None)
@given(alphas, mags, signs)
def test_metric_reconstruction(alpha, mag, sign):
    assert geo.verify_metric_reconstruction(geo.SurfaceGeometry(alpha), sign * mag) <= 1e-15


@settings(max_examples=300, deadline=None)
@given(alphas, st.one_of(st.just(0.0), st.floats(1e-6, 1e3)), mags)
def test_vector_potential_even_and_flux(alpha, B0, l):
    g = geo.SurfaceGeometry(alpha)
    assert geo.vector_potential(g, B0, l) == geo.vector_potential(g, B0, -l)
    want = geo.projected_disc_flux(g, B0, l)
    assert abs(geo.flux_through_loop(g, B0, -l) - want) <= 1e-13 * want


@given(alphas)
def test_spinorial_is_minus_half_spin_connection(alpha):
    g = geo.SurfaceGeometry(alpha)
    assert geo.spinorial_connection_coefficient(g) == -geo.spin_connection_coefficient(g) / 2


@settings(max_examples=500)
@given(real_j, signs, alphas)
def test_order_identity_and_swaps(j, s, alpha):
    nu_a, nu_b = fd.bessel_orders(j, s, alpha)
    assert nu_a == abs(j / alpha - s / 2) and nu_b == abs(j / alpha + s / 2)
    assert fd.bessel_orders(-j, s, alpha) == (nu_b, nu_a)
    assert fd.bessel_orders(j, -s, alpha) == (nu_b, nu_a)


@given(st.floats(1e-12, 0.5), signs, alphas)
def test_scar_cardinality_away_from_zero(j, sign, alpha):
    (row,) = fd.scar_scan(1, alpha, [sign * j])
    # one negative branch is lost as soon as j leaves zero, unless |j|/alpha is large enough to lose both
    assert row.basis_size <= 3


landau_states = st.builds(
    ld.LandauState, st.integers(0, 10), st.integers(-10, 10),
    st.builds(fd.SpinChannel, signs, signs), signs)


@settings(max_examples=500)
@given(landau_states, alphas, fields, st.floats(0, 10))
def test_energy_bound_and_slope(state, alpha, B0, m):
    f = ld.FieldConfig(B0, m)
    e2 = ld.energy_squared(state, alpha, f)
    assert e2 >= m * m
    up = ld.energy_squared(ld.LandauState(state.n + 1, state.j, state.channel, state.eta), alpha, f)
    assert up > e2
    assert math.isclose(up - e2, 2 * B0 * alpha, rel_tol=1e-9 * max(1.0, e2 / (B0 * alpha)))


@settings(max_examples=300)
@given(landau_states, alphas, fields, st.floats(0, 10))
def test_truncation_identity(state, alpha, B0, m):
    lam, s = state.channel.lam, state.channel.s
    M = ld.m_index(state.j, alpha, lam, s)
    omega = ld.cyclotron_scale(B0, alpha)
    want = ld.truncation_k(state.n, M, omega) - B0 * state.eta * (state.j + lam * s * alpha) / 2 + m * m
    got = ld.energy_squared(state, alpha, ld.FieldConfig(B0, m))
    assert math.isclose(got, want, rel_tol=1e-12)


@given(st.integers(0, 10), st.integers(-10, 10), signs, signs, alphas)
def test_free_limit_degeneracy(n, j, lam, s, alpha):
    assert abs(ld.nappe_splitting(n, j, lam, s, alpha, ld.FieldConfig(1e-300))) < 1e-290


@settings(max_examples=300, deadline=None)
@given(st.floats(-9, 9), st.floats(0.5, 30))
def test_bessel_recurrence(nu, x):
    lhs = sf.bessel_j(nu - 1, x) + sf.bessel_j(nu + 1, x)
    rhs = 2 * nu / x * sf.bessel_j(nu, x)
    scale = abs(sf.bessel_j(nu - 1, x)) + abs(sf.bessel_j(nu + 1, x))
    assert abs(lhs - rhs) <= 1e-9 * scale
