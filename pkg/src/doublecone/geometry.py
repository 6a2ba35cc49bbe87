"""Double-cone coordinates: metric, triad, connections and the axial-field vector potential.

Points of the double cone are labelled by an extended radial coordinate
``l`` in (-inf, inf) and the azimuth ``phi``; the sign of ``l`` picks the
nappe.  The opening parameter is ``alpha = sin(theta)``.

Gamma-matrix convention (documentation only, no computed value depends on it):
a reducible four-component representation with
``gamma^0 = diag(1, 1, -1, -1)`` in 2x2 blocks and
``Sigma^3 = diag(sigma^3, sigma^3)``.  Everything downstream works with the
scalar radial equations obtained after fixing the sigma^3 eigenvalue ``s``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ApexError, DoubleConeError

GAMMA0_BLOCKS = ("+1", "+1", "-1", "-1")
SIGMA3_BLOCKS = ("sigma3", "sigma3")


@dataclass(frozen=True)
class UnitSystem:
    hbar: float = 1.0
    c: float = 1.0
    e: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "c", "e"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise DoubleConeError(f"{name} must be a positive finite number, got {value!r}")


NATURAL = UnitSystem()


@dataclass(frozen=True)
class SurfaceGeometry:
    """Cone opening ``alpha = sin(theta)``; ``alpha = 1`` is the flat plane."""

    alpha: float

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise DoubleConeError(f"alpha must lie in (0, 1], got {self.alpha!r}")


def nappe(l: float) -> int:
    """Nappe label eta = sign(l), with eta = +1 at the apex."""
    return 1 if l >= 0 else -1


def metric_components(geom: SurfaceGeometry, l: float, units: UnitSystem = NATURAL) -> np.ndarray:
    """Diagonal metric in (t, l, phi) order: diag(-c^2, 1, alpha^2 l^2)."""
    scaled = geom.alpha * l
    return np.diag([-units.c * units.c, 1.0, scaled * scaled])


def inverse_triad(geom: SurfaceGeometry, l: float) -> np.ndarray:
    """Frame vectors e_a^mu = diag(1, 1, 1/(alpha l))."""
    if l == 0:
        raise ApexError("the triad is singular at the apex l = 0")
    return np.diag([1.0, 1.0, 1.0 / (geom.alpha * l)])


def direct_triad(geom: SurfaceGeometry, l: float) -> np.ndarray:
    """Co-frame e^a_mu = diag(1, 1, alpha l), the matrix inverse of :func:`inverse_triad`."""
    if l == 0:
        raise ApexError("the triad is singular at the apex l = 0")
    return np.diag([1.0, 1.0, geom.alpha * l])


def verify_metric_reconstruction(geom: SurfaceGeometry, l: float, units: UnitSystem = NATURAL) -> float:
    """Max entry-wise deviation of e^a_mu e^b_nu eta_ab from the metric.

    Also checks that the co-frame really inverts :func:`inverse_triad`; a
    relative mismatch there above 4 ulp is reported as the residual.
    """
    coframe = direct_triad(geom, l)
    frame = inverse_triad(geom, l)
    inverse_mismatch = float(np.max(np.abs(coframe @ frame - np.eye(3))))
    if inverse_mismatch > 4 * np.finfo(float).eps:
        return inverse_mismatch
    flat = np.diag([-units.c * units.c, 1.0, 1.0])
    rebuilt = coframe.T @ flat @ coframe
    return float(np.max(np.abs(rebuilt - metric_components(geom, l, units))))


def spin_connection_coefficient(geom: SurfaceGeometry) -> float:
    """omega_{phi 21}; the only other non-zero component is omega_{phi 12} = -alpha."""
    return geom.alpha


def spin_connection_components(geom: SurfaceGeometry) -> dict[tuple[str, int, int], float]:
    return {("phi", 2, 1): geom.alpha, ("phi", 1, 2): -geom.alpha}


def spinorial_connection_coefficient(geom: SurfaceGeometry) -> float:
    """Coefficient multiplying i*Sigma^3 in Omega_phi, i.e. -alpha/2."""
    return -0.5 * spin_connection_coefficient(geom)


def vector_potential(geom: SurfaceGeometry, B0: float, l: float) -> float:
    """Azimuthal component A_phi = B0 alpha |l| / 2 (same field direction on both nappes)."""
    if B0 < 0:
        raise DoubleConeError("B0 must be non-negative")
    return 0.5 * B0 * geom.alpha * abs(l)


def flux_through_loop(geom: SurfaceGeometry, B0: float, l: float) -> float:
    """Circulation of A around the circle at ``l``; equals pi B0 (alpha l)^2."""
    return vector_potential(geom, B0, l) * 2.0 * math.pi * geom.alpha * abs(l)


def projected_disc_flux(geom: SurfaceGeometry, B0: float, l: float) -> float:
    return math.pi * B0 * (geom.alpha * l) ** 2
