"""Walkthrough: exact Pell-type equation solving.

Fundamental units, the negative equation, solution generation, and the
brute-force oracle, all in exact integer arithmetic.
"""

from k3hilb import (
    PellProblem,
    brute_force_minimal,
    fundamental_solution,
    generate_solutions,
    minimal_solution,
    negative_pell,
)

print("== fundamental units ==")
for d in (2, 6, 10, 15, 61):
    u, v = fundamental_solution(d)
    print(f"x^2 - {d}*y^2 = 1: minimal ({u}, {v}); check {u}^2 - {d}*{v}^2 = {u*u - d*v*v}")

print()
print("== negative equation ==")
for d in (2, 3, 10, 13):
    sol = negative_pell(d)
    print(f"x^2 - {d}*y^2 = -1: {'unsolvable' if sol is None else f'minimal {tuple(sol)}'}")

print()
print("== general right-hand sides ==")
for d, m in ((20, 5), (24, 5), (13, 3), (6, -2)):
    sol = minimal_solution(PellProblem(d, m))
    print(f"x^2 - {d}*y^2 = {m}: {'unsolvable' if sol is None else f'minimal {tuple(sol)}'}")

print()
print("== solution towers from the unit ==")
sols = generate_solutions(PellProblem(6, 1), fundamental_solution(6), 5)
print("d = 6, m = 1:", "  ".join(str(tuple(s)) for s in sols))

print()
print("== cross-check against the exhaustive oracle ==")
for d in (6, 10, 15):
    for m in (1, -1, 5):
        fast = minimal_solution(PellProblem(d, m))
        slow = brute_force_minimal(PellProblem(d, m), 10**5)
        marker = "ok" if fast == slow else "MISMATCH"
        print(f"d={d:3d} m={m:2d}: solver {fast}  oracle {slow}  [{marker}]")
