"""Walkthrough: discriminant forms, glueing, and partner counting.

A degree-2e K3 surface of Picard rank one has transcendental lattice with
cyclic discriminant group of order 2e.  Glueing it back against the rank-1
Picard lattice realizes the full K3 lattice; inequivalent glueings are the
Fourier-Mukai partners, counted by 2^(p(e)-1).
"""

from k3hilb import (
    enumerate_I,
    enumerate_J,
    fm_partner_count,
    overlattice_check,
    p_of_e,
    square_roots_of_unity,
)

e = 6
print(f"== glueing bookkeeping for e = {e} ==")
print(f"dis(T) = {-2*e}, dis(Zh) = {2*e}, subgroup order {2*e}")
print("glued discriminant:", overlattice_check(-2 * e, 2 * e, 2 * e), "(unimodular: the K3 lattice)")
print("against the full rank-2 Picard lattice:",
      overlattice_check(-2 * e, -4 * e, 2 * e), "(the Hilbert-square lattice)")

print()
print("== isotropic glueing data ==")
for e in (6, 10, 15):
    z0 = [g.a for g in enumerate_I(e)]
    z1 = [g.a for g in enumerate_J(e) if g.z == 1]
    print(f"e = {e:2d}: a^2 = 1 mod {4*e} at a in {z0}; z = 1 branch at a in {z1 or '{}'}")

print()
print("== partner counts follow 2^(p(e)-1) ==")
print(" e   p(e)  roots of unity  partner orbits")
for e in range(1, 31):
    count, orbits = fm_partner_count(e)
    roots = square_roots_of_unity(e)
    print(f"{e:2d}   {p_of_e(e)}     {len(roots):2d}              {orbits}")
