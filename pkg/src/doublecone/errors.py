"""Exception types raised by the double-cone solvers."""


class DoubleConeError(ValueError):
    """Base class for every error raised by this package."""


class ApexError(DoubleConeError):
    """Raised when an operation needs 1/l at the cone apex l = 0."""


class DomainError(DoubleConeError):
    """Argument outside the domain of a special function."""


class PoleError(DoubleConeError):
    """Argument sits on a pole (Gamma at non-positive integers, Kummer b-poles)."""


class SubThresholdError(DoubleConeError):
    """Energy below the rest-mass threshold, E**2 < m**2 c**4."""


class ZeroFieldError(DoubleConeError):
    """Landau quantities requested with B0 <= 0."""


class UnderResolvedGridError(DoubleConeError):
    """Finite-difference eigenvalues did not pass the N vs 2N Richardson check."""


class ConvergenceError(DoubleConeError):
    """Quadrature or a series failed to converge."""


class InconsistentPairError(DoubleConeError):
    """A (psi_A, psi_B) pair does not satisfy the coupled first-order system."""


class DegeneratePairError(InconsistentPairError):
    """Zero-wavenumber (E = m c^2) pair; the coupled check is meaningless there."""
