"""Verification suites behind ``doublecone verify``.

Each suite returns a list of :class:`Check` records; every sample set is
drawn from a fixed seed so reports are reproducible byte for byte.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import free_dynamics as fd
from . import geometry as geo
from . import landau as ld
from . import oracle
from . import specfun as sf

SEED = 20160101
SUITES = ("geometry", "specfun", "free", "landau", "spectrum")
FAULTS = ("drop-eta-term",)


@dataclass
class Check:
    name: str
    value: float
    tolerance: float
    worst: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.tolerance)

    def as_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "tolerance": self.tolerance,
                "passed": self.passed, "worst": self.worst}


def _check(name: str, pairs, tol: float) -> Check:
    value, where = max(pairs, key=lambda p: p[0])
    return Check(name, float(value), tol, where)


def geometry_suite(draws: int = 2000) -> list[Check]:
    rng = np.random.default_rng(SEED)
    recon, flux, parity = [], [], []
    for alpha, mag, sign, B0 in zip(rng.uniform(1e-6, 1.0, draws), 10 ** rng.uniform(-6, 6, draws),
                                    rng.choice([-1.0, 1.0], draws), rng.uniform(0, 10, draws)):
        g = geo.SurfaceGeometry(float(alpha))
        l = float(sign * mag)
        where = {"alpha": alpha, "l": l, "B0": B0}
        recon.append((geo.verify_metric_reconstruction(g, l), where))
        expected = geo.projected_disc_flux(g, B0, l)
        flux.append((abs(geo.flux_through_loop(g, B0, l) - expected) / max(expected, 1e-300), where))
        parity.append((abs(geo.vector_potential(g, B0, l) - geo.vector_potential(g, B0, -l)), where))
    return [_check("metric_reconstruction", recon, 1e-15), _check("flux_consistency", flux, 1e-13),
            _check("vector_potential_even", parity, 0.0)]


def _rel(a, b):
    return abs(a - b) / abs(b)


def specfun_suite() -> list[Check]:
    half = []
    for x in np.linspace(0.1, 40.0, 400):
        x = float(x)
        root = math.sqrt(2.0 / (math.pi * x))
        half.append((_rel(sf.bessel_j(0.5, x), root * math.sin(x)), {"nu": 0.5, "x": x}))
        half.append((_rel(sf.bessel_j(-0.5, x), root * math.cos(x)), {"nu": -0.5, "x": x}))
    kl = []
    for n in range(11):
        for a in (0.0, 0.5, 1.0, 2.5):
            for z in np.linspace(0.0, 30.0, 31):
                lag = sf.laguerre(n, a, float(z))
                kum = sf.kummer_m(-n, a + 1.0, float(z))
                target = lag / sf.laguerre_binomial(n, a)
                kl.append((abs(kum - target) / max(abs(target), 1e-300), {"n": n, "a": a, "z": float(z)}))
    rng = np.random.default_rng(SEED)
    vs_oracle = []
    for nu, x in zip(rng.uniform(-10, 10, 300), rng.uniform(0.0, 30.0, 300)):
        nu, x = float(nu), float(x)
        ref = oracle.series_bessel_oracle(nu, x)
        vs_oracle.append((_rel(sf.bessel_j(nu, x), ref), {"nu": nu, "x": x}))
    return [_check("half_integer_closed_forms", half, 1e-12),
            _check("kummer_laguerre_identity", kl, 1e-12),
            _check("bessel_vs_series_oracle", vs_oracle, 1e-10)]


def free_suite() -> list[Check]:
    l = np.linspace(0.5, 10.0, 20)
    unc = []
    for j, s, alpha in ((0, 1, 0.7), (1, 1, 1.0), (2, -1, 1.0), (-1, 1, 0.5), (2, 1, 0.3)):
        psi_a, psi_b = fd.free_solution(j, s, alpha, 1.0)
        nu_a, nu_b = fd.bessel_orders(j, s, alpha)
        unc.append((fd.uncoupled_residual(psi_a, 1.0, nu_a, l), {"j": j, "s": s, "alpha": alpha, "part": "A"}))
        unc.append((fd.uncoupled_residual(psi_b, 1.0, nu_b, l), {"j": j, "s": s, "alpha": alpha, "part": "B"}))
    coupled = []
    E, m = 1.7, 1.0
    K = fd.wavenumber(E, m)
    samples = np.linspace(0.3, 15.0, 50)
    for j, s, alpha in ((0, 1, 0.7), (0, -1, 1.0), (2, -1, 1.0), (-1, 1, 0.5), (2, 1, 0.3), (-2, -1, 0.7)):
        psi_a, _ = fd.free_solution(j, s, alpha, K)
        psi_a = psi_a.with_coefficients(1.0, *[0.0] * (psi_a.basis_size - 1))
        partner = fd.matched_partner(psi_a, E, m, j, s, alpha)
        coupled.append((fd.coupled_residual(E, m, j, s, alpha, psi_a, partner, samples),
                        {"j": j, "s": s, "alpha": alpha}))
    rows = fd.scar_scan(1, 0.7, [0.0, 1e-4, -1e-4])
    scar_ok = [r.basis_size for r in rows] == [4, 3, 3]
    nonrel = []
    for ratio in (1e-2, 1e-3, 1e-4):
        m = 1.0
        E = m + ratio * m
        eps = E - m  # exact kinetic energy of the representable E
        k2 = fd.wavenumber(E, m) ** 2
        k2_nr = fd.nonrelativistic_wavenumber(eps, m) ** 2
        nonrel.append((abs(abs(k2 - k2_nr) / k2_nr - eps / (2 * m)) / (eps / (2 * m)), {"eps_over_mc2": ratio}))
    return [_check("uncoupled_residual", unc, 1e-8),
            _check("coupled_residual", coupled, 1e-8),
            Check("scar_cardinality_mismatch", 0.0 if scar_ok else 1.0, 0.0,
                  {"basis_sizes": [r.basis_size for r in rows]}),
            _check("nonrelativistic_limit", nonrel, 1e-9)]


def landau_suite() -> list[Check]:
    resid, split, bound = [], [], []
    for alpha in (0.3, 0.5, 0.7, 1.0):
        for j in range(-2, 3):
            for s in (1, -1):
                for lam in (1, -1):
                    channel = fd.SpinChannel(s, lam)
                    M = ld.m_index(j, alpha, lam, s)
                    for n in range(4):
                        where = {"alpha": alpha, "j": j, "s": s, "lambda": lam, "n": n}
                        field_cfg = ld.FieldConfig(1.0, 1.0)
                        got = ld.nappe_splitting(n, j, lam, s, alpha, field_cfg)
                        want = j + lam * s * alpha
                        split.append((abs(got - want) / abs(want) if want else abs(got), where))
                        for eta in (1, -1):
                            e2 = ld.energy_squared(ld.LandauState(n, j, channel, eta), alpha, field_cfg)
                            bound.append((max(0.0, field_cfg.m**2 - e2), where))
                        if s == 1 and M != 0:
                            prof = ld.radial_profile(ld.LandauState(n, j, channel), alpha, field_cfg,
                                                     normalize=False)
                            l = np.linspace(prof.cutoff / 50, 0.6 * prof.cutoff, 50)
                            k = ld.truncation_k(n, M, prof.omega)
                            resid.append((ld.ode_residual(prof, k, M, prof.omega, l), where))
    return [_check("profile_ode_residual", resid, 1e-8),
            _check("nappe_splitting_identity", split, 1e-12),
            _check("rest_mass_bound_violation", bound, 0.0)]


def spectrum_suite(N: int = oracle.ACCEPTANCE_N, fault: str | None = None) -> list[Check]:
    report = oracle.compare_spectrum(N=N, drop_eta_term=(fault == "drop-eta-term"))
    worst = report.worst
    where = {} if worst is None else {
        "alpha": worst.alpha, "n": worst.n, "j": worst.j, "lambda": worst.lam, "s": worst.s,
        "eta": worst.eta, "m": worst.m, "k_analytic": worst.k_analytic, "k_oracle": worst.k_oracle}
    return [Check("spectrum_vs_fd_oracle", report.max_rel_error, report.tolerance, where)]


def run(suites=SUITES, N: int = oracle.ACCEPTANCE_N, fault: str | None = None) -> dict:
    """Run the selected suites and return the JSON-ready report."""
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    runners = {"geometry": geometry_suite, "specfun": specfun_suite, "free": free_suite,
               "landau": landau_suite, "spectrum": lambda: spectrum_suite(N, fault)}
    out = []
    for name in SUITES:
        if name not in suites:
            continue
        checks = runners[name]()
        out.append({"suite": name, "passed": all(c.passed for c in checks),
                    "checks": [c.as_dict() for c in checks]})
    return {"format": "doublecone-verify/1", "fault": fault, "N": N,
            "passed": all(s["passed"] for s in out), "suites": out}
