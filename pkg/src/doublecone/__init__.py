"""Relativistic spin-1/2 states on a double cone.

Free Bessel modes with their small-|j| admissibility scar, Landau levels in
a uniform axial field, and a finite-difference oracle that checks the
closed-form spectrum.
"""
__version__ = "0.1.0"

from .errors import (ApexError, ConvergenceError, DegeneratePairError, DomainError, DoubleConeError,
                     InconsistentPairError, PoleError, SubThresholdError, UnderResolvedGridError,
                     ZeroFieldError)
from .geometry import NATURAL, SurfaceGeometry, UnitSystem
from .specfun import bessel_j, gamma_fn, kummer_m, laguerre
from .free_dynamics import (RadialSolution, SpinChannel, bessel_orders, coupled_residual, free_solution,
                            matched_partner, scar_scan, wavenumber)
from .landau import (FieldConfig, LandauState, energy_squared, figure3_data, landau_level,
                     nappe_splitting, radial_profile)
from .oracle import compare_spectrum, fd_eigenvalues

__all__ = [
    "ApexError", "ConvergenceError", "DegeneratePairError", "DomainError", "DoubleConeError",
    "InconsistentPairError", "PoleError", "SubThresholdError", "UnderResolvedGridError", "ZeroFieldError",
    "NATURAL", "SurfaceGeometry", "UnitSystem",
    "bessel_j", "gamma_fn", "kummer_m", "laguerre",
    "RadialSolution", "SpinChannel", "bessel_orders", "coupled_residual", "free_solution",
    "matched_partner", "scar_scan", "wavenumber",
    "FieldConfig", "LandauState", "energy_squared", "figure3_data", "landau_level", "nappe_splitting",
    "radial_profile",
    "compare_spectrum", "fd_eigenvalues",
]
