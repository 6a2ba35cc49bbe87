"""Landau levels on the double cone in a uniform axial field B0 z.

With omega = e B0 alpha / (2 hbar c) and M = j/alpha - lambda s / 2 each
component obeys

    psi'' + psi'/l - M^2 psi / l^2 + K_lambda psi - omega^2 l^2 psi = 0,
    K_lambda = (E^2 - m^2 c^4)/(hbar c)^2 + (e B0 eta / 2 hbar c)(j + lambda s alpha).

Normalizable solutions need K_lambda = 2 omega (2n + |M| + 1), n = 0, 1, ...,
which gives

    E^2 = 2 e B0 hbar c alpha {n + 1/2 + |M|/2 - eta (j + lambda s alpha)/(4 alpha)} + m^2 c^4.

The nappe label eta = sign(l) enters only through K_lambda, so the two
nappes carry different spectra once B0 > 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _numdiff
from .errors import DoubleConeError, ZeroFieldError
from .free_dynamics import SpinChannel, _check_alpha, _check_sign
from .geometry import NATURAL, UnitSystem
from .specfun import kummer_m


@dataclass(frozen=True)
class FieldConfig:
    B0: float
    m: float = 0.0

    def __post_init__(self):
        if self.B0 < 0 or self.m < 0:
            raise DoubleConeError("B0 and m must be non-negative")


@dataclass(frozen=True)
class LandauState:
    n: int
    j: int
    channel: SpinChannel = field(default_factory=SpinChannel)
    eta: int = 1

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DoubleConeError(f"n must be a non-negative integer, got {self.n!r}")
        if int(self.j) != self.j:
            raise DoubleConeError(f"j must be an integer for Landau states, got {self.j!r}")
        _check_sign("eta", self.eta)


def m_index(j: float, alpha: float, lam: int, s: int) -> float:
    _check_alpha(alpha)
    return j / alpha - 0.5 * lam * s


def cyclotron_scale(B0: float, alpha: float, units: UnitSystem = NATURAL) -> float:
    """omega = e B0 alpha / (2 hbar c); the dimensionless variable is zeta = omega l^2."""
    if not B0 > 0:
        raise ZeroFieldError("Landau levels require B0 > 0")
    return units.e * B0 * alpha / (2.0 * units.hbar * units.c)


def k_lambda(E, m, B0, j, lam, s, alpha, eta, units: UnitSystem = NATURAL) -> float:
    _check_alpha(alpha)
    hc = units.hbar * units.c
    rest = m * units.c**2
    return (E * E - rest * rest) / (hc * hc) + units.e * B0 * eta / (2.0 * hc) * (j + lam * s * alpha)


def energy_squared(state: LandauState, alpha: float, field: FieldConfig, units: UnitSystem = NATURAL,
                   drop_eta_term: bool = False) -> float:
    """E^2 of a Landau level.

    ``drop_eta_term`` removes the nappe-coupling term; it exists only to
    feed a deliberately wrong formula to the oracle comparison.
    """
    if not field.B0 > 0:
        raise ZeroFieldError("Landau levels require B0 > 0")
    _check_alpha(alpha)
    lam, s = state.channel.lam, state.channel.s
    M = m_index(state.j, alpha, lam, s)
    brace = state.n + 0.5 + 0.5 * abs(M)
    if not drop_eta_term:
        brace -= state.eta / (4.0 * alpha) * (state.j + lam * s * alpha)
    rest = field.m * units.c**2
    return 2.0 * units.e * field.B0 * units.hbar * units.c * alpha * brace + rest * rest


def landau_level(state: LandauState, alpha: float, field: FieldConfig, branch: int = 1,
                 units: UnitSystem = NATURAL) -> float:
    """Particle (branch=+1) or antiparticle (branch=-1) energy."""
    _check_sign("branch", branch)
    return branch * math.sqrt(energy_squared(state, alpha, field, units))


def nappe_splitting(n, j, lam, s, alpha, field: FieldConfig, units: UnitSystem = NATURAL) -> float:
    """E^2(eta=-1) - E^2(eta=+1); algebraically e B0 hbar c (j + lambda s alpha)."""
    channel = SpinChannel(s=s, lam=lam)
    lower = energy_squared(LandauState(n, j, channel, eta=-1), alpha, field, units)
    upper = energy_squared(LandauState(n, j, channel, eta=1), alpha, field, units)
    return lower - upper


def is_nappe_degenerate(j, lam, s, alpha) -> bool:
    """True when j + lambda s alpha = 0, i.e. both nappes share the level."""
    return j + lam * s * alpha == 0


def truncation_k(n: int, M: float, omega: float) -> float:
    """K_lambda for which the Kummer series terminates after degree n."""
    return 2.0 * omega * (2 * n + abs(M) + 1)


def profile_cutoff(n: int, M: float, omega: float) -> float:
    return 8.0 * math.sqrt((2 * n + abs(M) + 1) / (2.0 * omega))


@dataclass(frozen=True)
class LandauProfile:
    """psi(l) = C exp(-omega l^2/2) (omega l^2)^{|M|/2} M(-n, |M|+1; omega l^2), evaluated in |l|."""

    M_abs: float
    omega: float
    n: int
    norm: float = 1.0

    def shape(self, l):
        l = np.abs(np.asarray(l, float))
        zeta = self.omega * l * l
        poly = kummer_m(-self.n, self.M_abs + 1.0, zeta)
        return np.exp(-0.5 * zeta) * zeta ** (0.5 * self.M_abs) * poly

    def __call__(self, l):
        values = self.norm * self.shape(l)
        return float(values) if np.ndim(values) == 0 else values

    @property
    def cutoff(self) -> float:
        return profile_cutoff(self.n, self.M_abs, self.omega)


def radial_profile(state: LandauState, alpha: float, field: FieldConfig, units: UnitSystem = NATURAL,
                   normalize: bool = True) -> LandauProfile:
    """Analytic radial profile, normalized on one nappe with measure 2 pi alpha |l| dl."""
    from .oracle import quadrature_norm

    omega = cyclotron_scale(field.B0, alpha, units)
    M = m_index(state.j, alpha, state.channel.lam, state.channel.s)
    profile = LandauProfile(abs(M), omega, int(state.n))
    if not normalize:
        return profile
    total = 2.0 * math.pi * quadrature_norm(profile.shape, alpha, (0.0, profile.cutoff))
    return LandauProfile(abs(M), omega, int(state.n), norm=1.0 / math.sqrt(total))


def ode_residual(profile: LandauProfile, k_lambda_value: float, M: float, omega: float, l_samples) -> float:
    """Max relative residual of the radial equation at the samples (l != 0).

    Terms are scaled by the largest sum of their absolute values on the
    sample set; derivatives are fourth-order finite differences.
    """
    l = np.abs(np.asarray(l_samples, float))
    if np.any(l == 0):
        raise DoubleConeError("l samples must exclude the apex")
    f, df, ddf = _numdiff.derivatives(profile, l, 1.0 / math.sqrt(omega))
    terms = (ddf, df / l, -M * M * f / (l * l), k_lambda_value * f, -omega * omega * l * l * f)
    size = np.max(sum(np.abs(t) for t in terms))
    return float(np.max(np.abs(sum(terms))) / size)


def figure3_data(alpha_list, states, B_grid, m: float = 0.0, channel: SpinChannel = SpinChannel(1, 1),
                 eta: int = -1, units: UnitSystem = NATURAL) -> list[tuple[float, int, int, float, float]]:
    """Rows (alpha, n, j, B, E) of positive-branch Landau energies versus field strength.

    Sorted by (alpha, n, j, B).
    """
    B_grid = [float(B) for B in B_grid]
    if not B_grid or any(B <= 0 for B in B_grid) or any(b <= a for a, b in zip(B_grid, B_grid[1:])):
        raise DoubleConeError("B grid must be positive and ascending")
    rows = []
    for alpha in sorted(float(a) for a in alpha_list):
        for n, j in sorted(states):
            state = LandauState(n, j, channel, eta)
            for B in B_grid:
                rows.append((alpha, n, j, B, landau_level(state, alpha, FieldConfig(B, m), units=units)))
    return rows


def fit_power_law(B, E) -> tuple[float, float]:
    """Least-squares fit E = c B^p in log space; returns (c, p)."""
    p, log_c = np.polyfit(np.log(np.asarray(B, float)), np.log(np.asarray(E, float)), 1)
    return float(math.exp(log_c)), float(p)
