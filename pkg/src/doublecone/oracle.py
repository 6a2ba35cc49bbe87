"""Independent checks for the analytic results.

The radial Landau equation becomes a one-dimensional Schrodinger problem
after psi = u / sqrt(l):

    -u'' + [(M^2 - 1/4)/l^2 + omega^2 l^2] u = K u,   u(0) = u(L) = 0.

It is discretized with the three-point Laplacian and its lowest eigenvalues
are located by Sturm-sequence bisection on the symmetric tridiagonal matrix.
Nothing here uses the truncation condition, so agreement with it is a real
test.  The module also carries an extended-precision Bessel series and the
quadrature used for normalization.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

import numpy as np
from scipy import integrate, linalg

from .errors import ConvergenceError, DomainError, DoubleConeError, UnderResolvedGridError
from .geometry import NATURAL, UnitSystem

ACCEPTANCE_N = 4000
SPECTRUM_TOLERANCE = 1e-4
_TINY = 1e-300


@dataclass(frozen=True)
class SturmLiouvilleProblem:
    M_abs: float
    omega: float
    shift: float = 0.0

    def __post_init__(self):
        if not self.omega > 0:
            raise DoubleConeError("omega must be positive")

    def potential(self, l):
        l = np.asarray(l, float)
        return (self.M_abs**2 - 0.25) / (l * l) + self.omega**2 * l * l + self.shift


@dataclass(frozen=True)
class FdGrid:
    """Interior points l_i = i h, i = 1..N, h = L/(N+1)."""

    L: float
    N: int

    @property
    def h(self) -> float:
        return self.L / (self.N + 1)

    @property
    def points(self) -> np.ndarray:
        return self.h * np.arange(1, self.N + 1)

    def refined(self) -> "FdGrid":
        """Same domain with half the spacing."""
        return FdGrid(self.L, 2 * self.N + 1)

    @classmethod
    def for_problem(cls, prob: SturmLiouvilleProblem, top_level: int, N: int = ACCEPTANCE_N) -> "FdGrid":
        """Domain wide enough for the Gaussian tail of levels up to ``top_level``."""
        return cls(8.0 * math.sqrt((2 * top_level + prob.M_abs + 1) / (2.0 * prob.omega)), N)


def _tridiagonal(prob: SturmLiouvilleProblem, grid: FdGrid) -> tuple[np.ndarray, float]:
    h = grid.h
    return 2.0 / (h * h) + prob.potential(grid.points), -1.0 / (h * h)


def _sturm_bisect(diags: np.ndarray, offdiag: np.ndarray, count: int, rtol: float = 4e-16) -> np.ndarray:
    """Lowest ``count`` eigenvalues of a batch of symmetric tridiagonal matrices.

    ``diags`` has shape (P, N); ``offdiag`` holds one constant off-diagonal
    value per matrix.  Returns shape (P, count).
    """
    P, N = diags.shape
    e2 = (offdiag * offdiag)[:, None]
    target = np.arange(1, count + 1)[None, :]

    def below(x):
        q = diags[:, :1] - x
        q[q == 0] = _TINY
        n_neg = (q < 0).astype(int)
        for i in range(1, N):
            q = (diags[:, i : i + 1] - x) - e2 / q
            q[q == 0] = _TINY
            n_neg += q < 0
        return n_neg

    spread = 2.0 * np.abs(offdiag)[:, None]
    lo = np.repeat(diags.min(axis=1)[:, None] - spread, count, axis=1)
    hi = np.repeat(np.maximum(lo[:, :1] + 1.0, 1.0), count, axis=1)
    while True:
        short = below(hi) < target
        if not short.any():
            break
        hi = np.where(short, 2.0 * np.abs(hi) + 1.0, hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        enough = below(mid) >= target
        hi = np.where(enough, mid, hi)
        lo = np.where(enough, lo, mid)
        if np.all(hi - lo <= rtol * np.maximum(np.abs(hi), np.abs(lo))):
            break
    return 0.5 * (lo + hi)


def _eigenvalues_batch(problems, grids, count: int) -> np.ndarray:
    if len({g.N for g in grids}) != 1:
        raise DoubleConeError("batched grids must share N")
    pairs = [_tridiagonal(p, g) for p, g in zip(problems, grids)]
    diags = np.vstack([d for d, _ in pairs])
    off = np.array([e for _, e in pairs])
    return _sturm_bisect(diags, off, count)


def richardson(coarse, fine):
    """Extrapolate O(h^2) values computed at spacings h and h/2."""
    return (4.0 * np.asarray(fine) - np.asarray(coarse)) / 3.0


def fd_eigenvalues_many(problems, grids, count: int, check: bool = False,
                        tol: float = SPECTRUM_TOLERANCE) -> np.ndarray:
    """Batched :func:`fd_eigenvalues`; one row of ``count`` values per problem."""
    values = _eigenvalues_batch(problems, grids, count)
    if check:
        fine = _eigenvalues_batch(problems, [g.refined() for g in grids], count)
        estimate = richardson(values, fine)
        err = np.abs(values - estimate) / np.abs(estimate)
        if np.max(err) > tol:
            worst = int(np.argmax(np.max(err, axis=1)))
            raise UnderResolvedGridError(
                f"Richardson error {np.max(err):.2e} > {tol:.1e} for {problems[worst]} on {grids[worst]}"
            )
    return values


def fd_eigenvalues(prob: SturmLiouvilleProblem, grid: FdGrid, count: int, check: bool = False,
                   tol: float = SPECTRUM_TOLERANCE) -> np.ndarray:
    """Lowest ``count`` eigenvalues of -u'' + V u = K u with Dirichlet ends, ascending.

    With ``check=True`` the grid is also solved at half spacing and an
    :class:`UnderResolvedGridError` is raised when the Richardson error
    estimate exceeds ``tol``.
    """
    return fd_eigenvalues_many([prob], [grid], count, check, tol)[0]


def fd_eigenvector(prob: SturmLiouvilleProblem, grid: FdGrid, eigenvalue: float, iterations: int = 3):
    """Grid eigenvector by inverse iteration at a converged eigenvalue.

    Returns ``(l, u)`` with ``h * sum(u**2) == 1`` and u positive near the apex.
    """
    diag, off = _tridiagonal(prob, grid)
    shift = eigenvalue * (1.0 + 1e-10) + 1e-12
    banded = np.zeros((3, grid.N))
    banded[0, 1:] = off
    banded[1] = diag - shift
    banded[2, :-1] = off
    u = np.ones(grid.N)
    for _ in range(iterations):
        u = linalg.solve_banded((1, 1), banded, u)
        u /= np.sqrt(grid.h * np.sum(u * u))
    first = u[np.argmax(np.abs(u) > 1e-8 * np.max(np.abs(u)))]
    return grid.points, u * np.sign(first)


def quadrature_norm(evaluator, alpha: float, interval: tuple[float, float], rtol: float = 1e-10) -> float:
    """Integral of |psi(l)|^2 alpha |l| dl over ``interval`` by adaptive quadrature."""
    a, b = interval

    def integrand(l):
        v = evaluator(l)
        return float(v * v) * alpha * abs(l)

    value, err = integrate.quad(integrand, a, b, epsabs=0.0, epsrel=rtol, limit=400)
    if value == 0.0 and err == 0.0:
        return 0.0
    if err > 1e-8 * abs(value):
        raise ConvergenceError(f"quadrature error estimate {err:.2e} for value {value:.6e}")
    return value


def series_bessel_oracle(nu: float, x: float, digits: int = 50) -> float:
    """J_nu(x) from the ascending series summed in ``digits``-digit decimal arithmetic."""
    nu, x = float(nu), float(x)
    if x < 0 or x > 30:
        raise DomainError(f"oracle series is limited to 0 <= x <= 30, got {x}")
    if abs(nu) > 10:
        raise DomainError(f"oracle series is limited to |nu| <= 10, got {nu}")
    if nu < 0 and nu.is_integer():
        return (-1) ** int(-nu) * series_bessel_oracle(-nu, x, digits)
    if x == 0:
        if nu == 0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError("negative non-integer order diverges at x = 0")
    with localcontext() as ctx:
        ctx.prec = digits
        quarter_sq = Decimal(x) * Decimal(x) / 4
        dnu = Decimal(nu)
        term = Decimal(1)
        total = Decimal(1)
        eps = Decimal(10) ** (-digits + 5)
        k = 0
        while True:
            k += 1
            term = -term * quarter_sq / (k * (dnu + k))
            total += term
            if k > quarter_sq and abs(term) < eps * abs(total):
                break
        prefactor = (0.5 * x) ** nu / math.gamma(nu + 1.0)
        return float(total) * prefactor


def liouville_residual(M: float, omega: float, K: float, u, points, dps: int = 40) -> float:
    """Compare the radial operator acting on u/sqrt(l) with the Liouville form acting on u.

    radial:    psi'' + psi'/l - M^2 psi/l^2 + K psi - omega^2 l^2 psi
    Liouville: [u'' - ((M^2 - 1/4)/l^2 + omega^2 l^2) u + K u] / sqrt(l)

    Derivatives are taken by ``mpmath.diff`` at ``dps`` digits.  ``u`` must
    accept mpmath numbers.  Returns the max relative difference.
    """
    import mpmath

    worst = 0.0
    with mpmath.workdps(dps):
        for l in points:
            l = mpmath.mpf(l)
            psi = lambda t: u(t) / mpmath.sqrt(t)
            d1 = mpmath.diff(psi, l, 1)
            d2 = mpmath.diff(psi, l, 2)
            radial = d2 + d1 / l - M * M * psi(l) / l**2 + K * psi(l) - omega**2 * l**2 * psi(l)
            liouville = (mpmath.diff(u, l, 2) - ((M * M - 0.25) / l**2 + omega**2 * l**2) * u(l) + K * u(l)) / mpmath.sqrt(l)
            scale = abs(d2) + abs(d1 / l) + abs(M * M * psi(l) / l**2) + abs(K * psi(l)) + abs(omega**2 * l**2 * psi(l))
            worst = max(worst, float(abs(radial - liouville) / scale))
    return worst


@dataclass
class SpectrumRow:
    alpha: float
    n: int
    j: int
    lam: int
    s: int
    eta: int
    B0: float
    m: float
    k_analytic: float
    k_oracle: float

    @property
    def rel_error(self) -> float:
        return abs(self.k_analytic - self.k_oracle) / abs(self.k_analytic)


@dataclass
class SpectrumReport:
    rows: list[SpectrumRow]
    excluded: list[tuple] = field(default_factory=list)
    tolerance: float = SPECTRUM_TOLERANCE

    @property
    def max_rel_error(self) -> float:
        return max((r.rel_error for r in self.rows), default=0.0)

    @property
    def worst(self) -> SpectrumRow | None:
        return max(self.rows, key=lambda r: r.rel_error, default=None)

    @property
    def failures(self) -> list[SpectrumRow]:
        return [r for r in self.rows if r.rel_error > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.failures


ACCEPTANCE_ALPHAS = (0.3, 0.5, 0.7, 1.0)
ACCEPTANCE_JS = tuple(range(-2, 3))
ACCEPTANCE_NS = tuple(range(4))
ACCEPTANCE_MASSES = (0.0, 1.0)


def compare_spectrum(
    ns=ACCEPTANCE_NS,
    js=ACCEPTANCE_JS,
    alphas=ACCEPTANCE_ALPHAS,
    B0: float = 1.0,
    masses=ACCEPTANCE_MASSES,
    tol: float = SPECTRUM_TOLERANCE,
    N: int = ACCEPTANCE_N,
    units: UnitSystem = NATURAL,
    drop_eta_term: bool = False,
) -> SpectrumReport:
    """Check the closed-form Landau spectrum against finite-difference eigenvalues.

    For every (alpha, j, s, lambda, eta, n, m) the analytic E^2 is converted
    to K_lambda and compared with the n-th oracle eigenvalue for (|M|, omega).
    Tuples with M = 0 are skipped and listed in ``excluded``.
    """
    from .free_dynamics import SpinChannel
    from .landau import FieldConfig, LandauState, cyclotron_scale, energy_squared, k_lambda, m_index

    ns = sorted(ns)
    count = ns[-1] + 1
    keys = {}
    excluded = []
    tuples = []
    for alpha in alphas:
        omega = cyclotron_scale(B0, alpha, units)
        for j in js:
            for s in (1, -1):
                for lam in (1, -1):
                    M = m_index(j, alpha, lam, s)
                    if M == 0:
                        excluded.append((alpha, j, lam, s))
                        continue
                    keys.setdefault((abs(M), omega), None)
                    tuples.append((alpha, j, s, lam, abs(M), omega))
    problems = [SturmLiouvilleProblem(M_abs, omega) for M_abs, omega in keys]
    grids = [FdGrid.for_problem(p, count - 1, N) for p in problems]
    eig = fd_eigenvalues_many(problems, grids, count) if problems else np.empty((0, count))
    lookup = dict(zip(keys, eig))

    rows = []
    for alpha, j, s, lam, M_abs, omega in tuples:
        channel = SpinChannel(s=s, lam=lam)
        for eta in (1, -1):
            for m in masses:
                field_cfg = FieldConfig(B0, m)
                for n in ns:
                    e2 = energy_squared(LandauState(n, j, channel, eta), alpha, field_cfg, units,
                                        drop_eta_term=drop_eta_term)
                    k_an = k_lambda(math.sqrt(e2), m, B0, j, lam, s, alpha, eta, units)
                    rows.append(SpectrumRow(alpha, n, j, lam, s, eta, B0, m, k_an, float(lookup[(M_abs, omega)][n])))
    rows.sort(key=lambda r: (r.alpha, r.j, r.s, r.lam, r.eta, r.m, r.n))
    return SpectrumReport(rows, excluded, tol)
