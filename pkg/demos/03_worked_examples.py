"""Walkthrough: the three instructive degrees e = 6, 10, 15.

e = 6:  the induced involution multiplies subgroup labels by 5, merging the
        two partner classes: strongly ambiguous.
e = 10: the induced involution is just a -> -a, so nothing merges, but the
        negative Pell equation is solvable: the square has an automorphism.
e = 15: the induced map leaves the z = 0 branch entirely, so again nothing
        merges and nothing stabilizes.
"""

from k3hilb import analyze, fundamental_solution, orbit_analysis

for e in (6, 10, 15):
    v = analyze(e)
    oa = orbit_analysis(e)
    u, vv = fundamental_solution(e)
    print(f"== e = {e} ==")
    print(f"minimal solution of x^2 - {e}*y^2 = 1: ({u}, {vv})")
    print(f"partner classes: {v.fm_count}  (orbits {v.fm_orbits})")
    arrows = "  ".join(
        f"J_{a}{'' if z == 0 else '[z=1]'} -> J_{b}{'' if w == 0 else '[z=1]'}"
        for (a, z), (b, w) in oa.arrows["theta_bar"]
        if z == 0
    )
    print(f"induced action on the z = 0 subgroups: {arrows}")
    print(f"Hilbert-square classes among partners: {v.hodge_classes}")
    print(f"strongly ambiguous: {v.strongly_ambiguous}")
    print(f"automorphism group order: {v.aut_order}")
    print()
