"""Walkthrough: scanning polarization degrees.

Lists every e up to 120 whose Hilbert square is strongly ambiguous, every e
with a nontrivial automorphism, and shows that the two phenomena never
coincide (an automorphism needs the glued involution to fix a subgroup, while
ambiguity needs it to move one).
"""

from k3hilb import analyze

ambiguous, auts = [], []
for e in range(1, 121):
    v = analyze(e)
    if v.strongly_ambiguous:
        ambiguous.append(e)
    if v.aut_order == 2:
        auts.append(e)

print("strongly ambiguous e <= 120:")
print("  ", ambiguous)
print("nontrivial automorphisms at e <= 120:")
print("  ", auts)
print("overlap:", sorted(set(ambiguous) & set(auts)) or "none")

print()
print(" e   partners  classes  nu      mu      ambiguous  |Aut|")
for e in (2, 5, 6, 10, 14, 15, 21, 30, 46, 110):
    v = analyze(e)
    print(
        f"{e:3d}  {v.fm_count:5d}    {v.hodge_classes:5d}   "
        f"{str(v.slopes.nu):7s} {str(v.slopes.mu):7s} "
        f"{str(v.strongly_ambiguous):9s}  {v.aut_order}"
    )
