"""Real-argument special functions used by the radial solvers.

Bessel J of arbitrary real order, Kummer's confluent hypergeometric M(a, b; z),
generalized Laguerre polynomials and the Gamma function.  All functions accept
a scalar argument; ``bessel_j``, ``kummer_m`` and ``laguerre`` also broadcast
over array arguments.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError

# Below this argument the ascending series loses at most a factor ~e^2 to
# cancellation; above it Miller's backward recurrence is used (except for
# negative orders with x < |nu|).
SERIES_CUTOFF = 2.0
_RESCALE = 1e200


class KummerParams(NamedTuple):
    a: float
    b: float
    z: float


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma_fn(x: float) -> float:
    """Gamma function; raises :class:`PoleError` at 0, -1, -2, ..."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    return math.gamma(x)


def _rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    if _is_nonpositive_integer(x):
        return 0.0
    return 1.0 / math.gamma(x)


def _bessel_series(nu: float, x: float) -> float:
    half_sq = -0.25 * x * x
    term = 1.0
    terms = [1.0]
    # for nu near a negative integer -n the factor 1/(nu + k) blows up at k = n,
    # so the tail must not be judged converged before k passes -nu
    k_min = max(0, math.ceil(-nu))
    k = 1
    while True:
        term *= half_sq / (k * (nu + k))
        terms.append(term)
        if (k > k_min and abs(term) < 1e-17 * abs(math.fsum(terms))) or k > 500:
            break
        k += 1
    return (0.5 * x) ** nu * _rgamma(nu + 1.0) * math.fsum(terms)


def _miller(frac: float, top: int, x: float) -> list[float]:
    """J_{frac+k}(x) for k = 0..top by backward recurrence, 0 <= frac < 1.

    Normalized with sum_i (frac+2i) Gamma(frac+i)/i! J_{frac+2i}(x) = (x/2)^frac.
    """
    start = int(max(x, top)) + 30 + int(math.sqrt(40.0 * max(x, top)))
    start += start % 2
    # weights w_i for even orders frac + 2i
    weights = [math.gamma(frac + 1.0)]
    g = math.gamma(frac + 1.0)  # Gamma(frac + i)/i! at i = 1
    for i in range(1, start // 2 + 1):
        if i > 1:
            g *= (frac + i - 1) / i
        weights.append((frac + 2 * i) * g)

    values = [0.0] * (top + 1)
    upper, current = 0.0, 1e-30
    norm_terms = []
    for k in range(start, -1, -1):
        if k % 2 == 0:
            norm_terms.append(weights[k // 2] * current)
        if k <= top:
            values[k] = current
        if k == 0:
            break
        lower = 2.0 * (frac + k) / x * current - upper
        upper, current = current, lower
        if abs(current) > _RESCALE:
            upper /= _RESCALE
            current /= _RESCALE
            norm_terms = [t / _RESCALE for t in norm_terms]
            for i in range(k, top + 1):
                values[i] /= _RESCALE
    scale = (0.5 * x) ** frac / math.fsum(norm_terms)
    return [v * scale for v in values]


def _bessel_j_scalar(nu: float, x: float) -> float:
    nu = float(nu)
    x = float(x)
    if not (math.isfinite(nu) and math.isfinite(x)):
        raise DomainError("bessel_j needs finite order and argument")
    if x < 0:
        raise DomainError(f"bessel_j is defined here for x >= 0, got x={x!r}")
    if nu < 0 and nu.is_integer():
        n = int(-nu)
        return (-1.0) ** n * _bessel_j_scalar(float(n), x)
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError(f"J_{nu}(x) diverges at x = 0 for negative non-integer order")
    if x <= SERIES_CUTOFF or (nu < 0 and x < -nu):
        # negative orders with x < |nu|: downward recurrence would amplify
        # the dominant solution near integer orders, the series does not
        return _bessel_series(nu, x)

    base = math.floor(nu)
    frac = nu - base
    if nu >= 0:
        return _miller(frac, int(base), x)[int(base)]
    j_mu, j_above = _miller(frac, 1, x)
    mu = frac
    while mu > nu + 0.5:
        j_mu, j_above = 2.0 * mu / x * j_mu - j_above, j_mu
        mu -= 1.0
    return j_mu


def bessel_j(nu, x):
    """Bessel function of the first kind J_nu(x) for real nu and x >= 0.

    Small arguments use the ascending series summed with ``math.fsum``;
    larger ones use Miller's backward recurrence, followed by downward
    recurrence into negative non-integer orders.  Relative accuracy is near
    machine precision away from the zeros of J_nu.
    """
    if np.ndim(nu) == 0 and np.ndim(x) == 0:
        return _bessel_j_scalar(nu, x)
    nu_b, x_b = np.broadcast_arrays(np.asarray(nu, float), np.asarray(x, float))
    out = np.empty(nu_b.shape)
    for idx in np.ndindex(out.shape):
        out[idx] = _bessel_j_scalar(nu_b[idx], x_b[idx])
    return out


def _kummer_scalar(a: float, b: float, z: float) -> float:
    if _is_nonpositive_integer(b):
        raise PoleError(f"M(a, b; z) has a pole at b={b!r}")
    if _is_nonpositive_integer(a):
        # degree n = -a polynomial, summed exactly in rationals and rounded once
        n = int(-a)
        zq, bq = Fraction(z), Fraction(b)
        term = total = Fraction(1)
        for k in range(n):
            term = term * (k - n) * zq / ((bq + k) * (k + 1))
            total += term
        return float(total)
    if z < 0:
        return math.exp(z) * _kummer_scalar(b - a, b, -z)
    term = 1.0
    terms = [1.0]
    for k in range(5000):
        term *= (a + k) * z / ((b + k) * (k + 1))
        terms.append(term)
        if abs(term) < 1e-17 * abs(math.fsum(terms)) and k > z:
            return math.fsum(terms)
    raise ConvergenceError(f"Kummer series did not converge for a={a}, b={b}, z={z}")


def kummer_m(a, b=None, z=None):
    """Kummer's confluent hypergeometric function M(a, b; z).

    Accepts either ``kummer_m(a, b, z)`` or ``kummer_m(KummerParams(...))``.
    When ``a = -n`` the series is the exact degree-n polynomial (n + 1 terms).
    """
    if b is None:
        a, b, z = a
    if np.ndim(z) == 0:
        return _kummer_scalar(float(a), float(b), float(z))
    z = np.asarray(z, float)
    return np.array([_kummer_scalar(float(a), float(b), zi) for zi in z.ravel()]).reshape(z.shape)


def laguerre(n: int, a: float, z):
    """Generalized Laguerre polynomial L_n^a(z) by the three-term recurrence."""
    if n < 0 or int(n) != n:
        raise DomainError(f"Laguerre degree must be a non-negative integer, got {n!r}")
    z = np.asarray(z, float) if np.ndim(z) else float(z)
    prev = 1.0 + 0.0 * z
    if n == 0:
        return prev
    cur = 1.0 + a - z
    for k in range(1, int(n)):
        prev, cur = cur, ((2 * k + 1 + a - z) * cur - (k + a) * prev) / (k + 1)
    return cur


def laguerre_binomial(n: int, a: float) -> float:
    """C(n + a, n), the factor linking L_n^a(z) to M(-n, a + 1; z)."""
    return math.prod((a + i) / i for i in range(1, n + 1))
