"""Free spin-1/2 particle on the double cone.

After fixing the sigma^3 eigenvalue ``s`` the radial problem splits into two
Bessel equations with orders

    nu_A = |j/alpha - s/2|,    nu_B = |j/alpha + s/2|

and wavenumber K = sqrt(E^2 - m^2 c^4) / (hbar c).  A Bessel solution J_nu
is kept only when nu >= -1/2 (closure relation); this is what makes the basis
jump between j = 0 and j -> 0 (the instability scar).

Coupled first-order system
--------------------------
The sigma^1/sigma^2 couplings pair the spin-``s`` component ``a`` of psi_A
with the spin ``-s`` component of psi_B.  Writing that component as ``i*b``
with ``b`` real, the pair obeys

    (E - m c^2) a = +hbar c (d/dl + p/l) b,     p = 1/2 + s j/alpha
    (E + m c^2) b = -hbar c (d/dl + q/l) a,     q = 1/2 - s j/alpha

Eliminating ``b`` gives the nu_A Bessel equation for ``a`` and vice versa.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from . import _numdiff
from .errors import DegeneratePairError, DoubleConeError, InconsistentPairError, SubThresholdError
from .geometry import NATURAL, UnitSystem
from .specfun import bessel_j

COUPLED_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SpinChannel:
    """``s`` is the sigma^3 eigenvalue, ``lam`` = +1 selects psi_A and -1 selects psi_B."""

    s: int = 1
    lam: int = 1

    def __post_init__(self):
        if self.s not in (-1, 1) or self.lam not in (-1, 1):
            raise DoubleConeError(f"s and lambda must be +1 or -1, got s={self.s}, lambda={self.lam}")


def _check_sign(name: str, value: int) -> None:
    if value not in (-1, 1):
        raise DoubleConeError(f"{name} must be +1 or -1, got {value!r}")


def _check_alpha(alpha: float) -> None:
    if not (0.0 < alpha <= 1.0):
        raise DoubleConeError(f"alpha must lie in (0, 1], got {alpha!r}")


def wavenumber(E: float, m: float, units: UnitSystem = NATURAL) -> float:
    rest = m * units.c**2
    # factored so that E - m c^2 is exact near threshold
    gap = (abs(E) - rest) * (abs(E) + rest)
    if gap < 0:
        raise SubThresholdError(f"E^2 = {E * E!r} is below m^2 c^4 = {rest * rest!r}")
    return math.sqrt(gap) / (units.hbar * units.c)


def nonrelativistic_wavenumber(epsilon: float, m: float, units: UnitSystem = NATURAL) -> float:
    """sqrt(2 m eps)/hbar for the kinetic energy ``epsilon`` above the rest mass."""
    if epsilon < 0:
        raise SubThresholdError("kinetic energy must be non-negative")
    return math.sqrt(2.0 * m * epsilon) / units.hbar


def bessel_orders(j: float, s: int, alpha: float) -> tuple[float, float]:
    """(nu_A, nu_B); the discriminants j^2/alpha^2 -+ s j/alpha + 1/4 are perfect squares."""
    _check_sign("s", s)
    _check_alpha(alpha)
    x = j / alpha
    return abs(x - 0.5 * s), abs(x + 0.5 * s)


def is_normalizable(nu: float) -> bool:
    return nu >= -0.5


def _admissible_orders(nu: float) -> tuple[float, ...]:
    if nu == 0:
        return (0.0,)
    return tuple(o for o in (nu, -nu) if is_normalizable(o))


@dataclass(frozen=True)
class RadialSolution:
    """Radial profile of one spinor component.

    ``kind == "sin_cos"``: (c0 sin(K l) + c1 cos(K l)) / sqrt(l), the j = 0 form.
    ``kind == "bessel_pair"``: sum_i c_i J_{orders[i]}(K l).

    Profiles are evaluated in |l|; ``parity`` (+1 even, -1 odd) fixes the
    continuation to the l < 0 nappe.  ``excluded`` lists the orders dropped
    by the closure-relation rule.
    """

    kind: str
    K: float
    orders: tuple[float, ...]
    coefficients: tuple[float, ...]
    excluded: tuple[float, ...] = ()
    parity: int = 1

    def __post_init__(self):
        if self.kind not in ("sin_cos", "bessel_pair"):
            raise DoubleConeError(f"unknown solution kind {self.kind!r}")
        if len(self.orders) != len(self.coefficients):
            raise DoubleConeError("one coefficient per order is required")
        bad = [o for o in self.orders if not is_normalizable(o)]
        if bad:
            raise DoubleConeError(f"orders {bad} are below -1/2 and cannot be normalized")
        _check_sign("parity", self.parity)

    @property
    def basis_size(self) -> int:
        return len(self.orders)

    def with_coefficients(self, *coefficients: float) -> "RadialSolution":
        return replace(self, coefficients=tuple(float(c) for c in coefficients))

    def with_parity(self, parity: int) -> "RadialSolution":
        return replace(self, parity=parity)

    def _positive(self, r):
        x = self.K * r
        if self.kind == "sin_cos":
            c_sin, c_cos = self.coefficients
            return (c_sin * np.sin(x) + c_cos * np.cos(x)) / np.sqrt(r)
        total = 0.0
        for order, coef in zip(self.orders, self.coefficients):
            if coef != 0:
                total = total + coef * bessel_j(order, x)
        return total + 0.0 * r

    def __call__(self, l):
        l = np.asarray(l, float)
        sign = np.where(l < 0, self.parity, 1)
        values = sign * self._positive(np.abs(l))
        return float(values) if values.ndim == 0 else values

    def exact_derivatives(self, l):
        """Closed-form (f, f', f'') on l > 0 for the sin/cos kind, else ``None``."""
        if self.kind != "sin_cos":
            return None
        l = np.asarray(l, float)
        c_sin, c_cos = self.coefficients
        K = self.K
        g = c_sin * np.sin(K * l) + c_cos * np.cos(K * l)
        dg = K * (c_sin * np.cos(K * l) - c_cos * np.sin(K * l))
        ddg = -K * K * g
        f = g * l**-0.5
        df = dg * l**-0.5 - 0.5 * g * l**-1.5
        ddf = ddg * l**-0.5 - dg * l**-1.5 + 0.75 * g * l**-2.5
        return f, df, ddf


def _component(kind: str, nu: float, K: float) -> RadialSolution:
    if kind == "sin_cos":
        return RadialSolution("sin_cos", K, (0.5, -0.5), (1.0, 1.0))
    kept = _admissible_orders(nu)
    dropped = () if nu == 0 else tuple(o for o in (nu, -nu) if not is_normalizable(o))
    return RadialSolution("bessel_pair", K, kept, (1.0,) * len(kept), excluded=dropped)


def free_solution(j: float, s: int, alpha: float, K: float) -> tuple[RadialSolution, RadialSolution]:
    """Admissible (psi_A, psi_B) bases with unit coefficients in every slot.

    ``j`` may be any real number here (scar analysis); the sin/cos form is
    used only for j == 0 exactly.
    """
    if not K > 0:
        raise DoubleConeError("free_solution needs K > 0")
    nu_a, nu_b = bessel_orders(j, s, alpha)
    kind = "sin_cos" if j == 0 else "bessel_pair"
    return _component(kind, nu_a, K), _component(kind, nu_b, K)


class ScarRow(NamedTuple):
    j: float
    nu_A: float
    nu_B: float
    neg_A_admissible: bool
    neg_B_admissible: bool

    @property
    def basis_size(self) -> int:
        """Admissible basis functions summed over both components."""
        return 2 + int(self.neg_A_admissible) + int(self.neg_B_admissible)


def scar_scan(s: int, alpha: float, j_grid) -> list[ScarRow]:
    """Admissibility of the negative-order branches J_{-nu_A}, J_{-nu_B} on a grid of j.

    Rows come back in grid order.
    """
    rows = []
    for j in j_grid:
        j = float(j)
        if not math.isfinite(j):
            raise DoubleConeError(f"j grid must be finite, got {j!r}")
        nu_a, nu_b = bessel_orders(j, s, alpha)
        rows.append(ScarRow(j, nu_a, nu_b, is_normalizable(-nu_a), is_normalizable(-nu_b)))
    return rows


def _coupling_exponents(j: float, s: int, alpha: float) -> tuple[float, float]:
    x = s * j / alpha
    return 0.5 + x, 0.5 - x


def matched_partner(
    psi_a: RadialSolution, E: float, m: float, j: float, s: int, alpha: float, units: UnitSystem = NATURAL
) -> RadialSolution:
    """The psi_B profile fixed by the second coupled equation, b = -hbar c (d/dl + q/l) a / (E + m c^2).

    Uses (d/dl + mu/l) J_mu(K l) = K J_{mu-1}(K l) and
    (d/dl - mu/l) J_mu(K l) = -K J_{mu+1}(K l); q always equals +-mu here.
    """
    hc = units.hbar * units.c
    factor = -hc / (E + m * units.c**2)
    K = psi_a.K
    if psi_a.kind == "sin_cos":
        c_sin, c_cos = psi_a.coefficients
        # (d/dl + 1/2l)(sin/sqrt l) = K cos/sqrt l, (d/dl + 1/2l)(cos/sqrt l) = -K sin/sqrt l
        return RadialSolution("sin_cos", K, (0.5, -0.5), (-factor * K * c_cos, factor * K * c_sin),
                              parity=psi_a.parity)
    _, q = _coupling_exponents(j, s, alpha)
    orders, coefs = [], []
    for mu, c in zip(psi_a.orders, psi_a.coefficients):
        if c == 0:
            continue
        if math.isclose(q, mu, rel_tol=1e-13, abs_tol=1e-13):
            orders.append(mu - 1.0)
            coefs.append(factor * K * c)
        elif math.isclose(q, -mu, rel_tol=1e-13, abs_tol=1e-13):
            orders.append(mu + 1.0)
            coefs.append(-factor * K * c)
        else:
            raise DoubleConeError(f"order {mu} is not a solution order for j={j}, s={s}, alpha={alpha}")
    bad = [o for o in orders if not is_normalizable(o)]
    if bad:
        raise DoubleConeError(f"the coupled partner needs non-normalizable orders {bad}")
    return RadialSolution("bessel_pair", K, tuple(orders), tuple(coefs), parity=psi_a.parity)


def coupled_residual(
    E: float,
    m: float,
    j: float,
    s: int,
    alpha: float,
    psi_a: RadialSolution,
    psi_b: RadialSolution,
    l_samples,
    units: UnitSystem = NATURAL,
    tol: float | None = None,
) -> float:
    """Max relative residual of the two coupled first-order equations on l > 0 samples.

    Each equation's residual is scaled by the largest |lhs| + |rhs| seen on
    the samples.  Raises :class:`DegeneratePairError` at E = m c^2 (K = 0)
    and, when ``tol`` is given, :class:`InconsistentPairError` above it.
    """
    l = np.asarray(l_samples, float)
    if np.any(l == 0):
        raise DoubleConeError("l samples must exclude the apex")
    l = np.abs(l)
    hc = units.hbar * units.c
    rest = m * units.c**2
    if wavenumber(E, m, units) == 0:
        raise DegeneratePairError("E = m c^2 gives K = 0: the pair is degenerate")
    p, q = _coupling_exponents(j, s, alpha)
    scale = 1.0 / psi_a.K
    a, da, _ = _numdiff.derivatives(psi_a, l, scale)
    b, db, _ = _numdiff.derivatives(psi_b, l, scale)

    lhs1, rhs1 = (E - rest) * a, hc * (db + p * b / l)
    lhs2, rhs2 = (E + rest) * b, -hc * (da + q * a / l)
    worst = 0.0
    for lhs, rhs in ((lhs1, rhs1), (lhs2, rhs2)):
        size = np.max(np.abs(lhs) + np.abs(rhs))
        if size == 0:
            continue
        worst = max(worst, float(np.max(np.abs(lhs - rhs)) / size))
    if tol is not None and worst > tol:
        raise InconsistentPairError(f"coupled residual {worst:.3e} exceeds {tol:.1e}")
    return worst


def uncoupled_residual(solution: RadialSolution, K: float, nu: float, l_samples) -> float:
    """Max relative residual of l^2 f'' + l f' + (K^2 l^2 - nu^2) f = 0 on l > 0.

    The sin/cos kind is differentiated in closed form, Bessel kinds with
    fourth-order finite differences.
    """
    l = np.abs(np.asarray(l_samples, float))
    if np.any(l == 0):
        raise DoubleConeError("l samples must exclude the apex")
    exact = solution.exact_derivatives(l)
    f, df, ddf = exact if exact is not None else _numdiff.derivatives(solution, l, 1.0 / solution.K)
    terms = (l * l * ddf, l * df, K * K * l * l * f, -nu * nu * f)
    size = np.max(sum(np.abs(t) for t in terms))
    if size == 0:
        return 0.0
    return float(np.max(np.abs(sum(terms))) / size)
