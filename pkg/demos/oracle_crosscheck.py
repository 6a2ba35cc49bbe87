"""Closed-form spectrum against a finite-difference eigensolver.

The oracle never sees the closed form.  It discretizes
-u'' + [(M^2 - 1/4)/l^2 + omega^2 l^2] u = K u on one nappe with three-point
differences and counts eigenvalues by Sturm sequences.
"""
import time

from doublecone import oracle

t0 = time.perf_counter()
report = oracle.compare_spectrum()
print(f"{len(report.rows)} states in {time.perf_counter() - t0:.1f}s, "
      f"max relative error {report.max_rel_error:.2e} (tolerance {report.tolerance:g})")
w = report.worst
print(f"worst: alpha={w.alpha} n={w.n} j={w.j} lambda={w.lam} s={w.s}: K {w.k_analytic:.8f} vs {w.k_oracle:.8f}")

# a formula without the nappe term is caught immediately
bad = oracle.compare_spectrum(drop_eta_term=True)
print(f"without the eta term: {len(bad.failures)} of {len(bad.rows)} states fail, "
      f"max error {bad.max_rel_error:.2f}")

# second-order convergence
prob = oracle.SturmLiouvilleProblem(1.5, 0.5)
grid = oracle.FdGrid.for_problem(prob, 0, 500)
exact = 2 * 0.5 * (1.5 + 1)
e1 = abs(oracle.fd_eigenvalues(prob, grid, 1)[0] - exact)
e2 = abs(oracle.fd_eigenvalues(prob, grid.refined(), 1)[0] - exact)
print(f"halving h cuts the error by {e1 / e2:.3f}")
