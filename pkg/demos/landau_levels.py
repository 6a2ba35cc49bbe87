"""Landau levels on the two nappes.

The field term in the radial equation carries eta = sign(l), so the two
nappes see different spectra.  The gap between them is
e B0 hbar c (j + lambda s alpha) for every n.
"""
from doublecone import FieldConfig, LandauState, SpinChannel, energy_squared, nappe_splitting

alpha, field = 0.7, FieldConfig(B0=1.0, m=0.0)
channel = SpinChannel(s=1, lam=1)
print(" n  j   E2(eta=+1)  E2(eta=-1)   split")
for n in range(3):
    for j in (-1, 0, 1):
        up = energy_squared(LandauState(n, j, channel, eta=1), alpha, field)
        down = energy_squared(LandauState(n, j, channel, eta=-1), alpha, field)
        print(f"{n:2d} {j:2d} {up:11.6f} {down:11.6f} {nappe_splitting(n, j, 1, 1, alpha, field):8.4f}")

# consecutive n are always 2 e B0 hbar c alpha apart
e = [energy_squared(LandauState(n, 0, channel), alpha, field) for n in range(4)]
print("level spacing:", [round(b - a, 12) for a, b in zip(e, e[1:])], "expected", 2 * alpha)
