"""The j -> 0 scar.

At j = 0 each spinor component carries both a sine and a cosine mode
(orders +1/2 and -1/2).  Move j off zero by any amount and one of the two
negative-order branches slips below -1/2, where the Bessel closure relation
no longer holds, so it is dropped.  The basis shrinks from 4 to 3 and the
limit j -> 0 does not give back the j = 0 problem.
"""
import numpy as np

from doublecone import DoubleConeError
from doublecone import free_dynamics as fd

alpha, s = 0.7, 1
print(f"{'j':>10} {'-nu_A':>10} {'-nu_B':>10}  basis")
for row in fd.scar_scan(s, alpha, [-1e-2, -1e-4, 0.0, 1e-4, 1e-2]):
    print(f"{row.j:>10.0e} {-row.nu_A:>10.6f} {-row.nu_B:>10.6f}  {row.basis_size}")

# what survives in psi_B as j -> 0+ is the sine mode
K = 1.0
l = np.linspace(0.5, 20, 6)
for j in (1e-2, 1e-4, 1e-8):
    _, psi_b = fd.free_solution(j, s, alpha, K)
    gap = np.max(np.abs(psi_b(l) - np.sqrt(2 / (np.pi * K * l)) * np.sin(K * l)))
    print(f"j={j:.0e}: kept orders {psi_b.orders}, dropped {psi_b.excluded}, |J - sine| <= {gap:.1e}")

# The same cut shows up through the coupled equations.  For j slightly above
# zero the J_{+nu_A} part of psi_A is tied to J_{-nu_B} in psi_B, which is gone.
psi_a, _ = fd.free_solution(1e-3, s, alpha, K)
try:
    fd.matched_partner(psi_a.with_coefficients(1.0, 0.0), 2 ** 0.5, 1.0, 1e-3, s, alpha)
except DoubleConeError as exc:
    print("partner of J_{+nu_A}:", exc)
