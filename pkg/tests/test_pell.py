from math import isqrt

import pytest

from k3hilb.pell import (
    PellProblem,
    PellSolution,
    brute_force_minimal,
    convergents,
    fundamental_solution,
    generate_solutions,
    is_square,
    minimal_solution,
    negative_pell,
    square_d_minimal,
)
from k3hilb.pell import _minimal_by_class_bound, _minimal_by_convergents


def nonsquares(limit):
    return [d for d in range(2, limit + 1) if not is_square(d)]


def test_fundamental_known_values():
    assert fundamental_solution(6) == (5, 2)
    assert fundamental_solution(10) == (19, 6)
    assert fundamental_solution(15) == (4, 1)
    assert fundamental_solution(2) == (3, 2)
    assert fundamental_solution(8) == (3, 1)


def test_fundamental_big_integer():
    u, v = fundamental_solution(61)
    assert (u, v) == (1766319049, 226153980)
    assert u * u - 61 * v * v == 1  # exact squaring, no floats involved


def test_fundamental_rejects_squares():
    for d in (0, 1, 4, 9, 49):
        with pytest.raises(ValueError):
            fundamental_solution(d)


def test_negative_pell_values():
    assert negative_pell(10) == (3, 1)
    assert negative_pell(2) == (1, 1)
    assert negative_pell(3) is None
    with pytest.raises(ValueError):
        negative_pell(16)


def test_negative_pell_squares_to_fundamental():
    # eta = U' + V'*sqrt(d) has eta^2 = fundamental unit
    for d in nonsquares(500):
        neg = negative_pell(d)
        if neg is None:
            continue
        u2, v2 = neg.x * neg.x + d * neg.y * neg.y, 2 * neg.x * neg.y
        assert fundamental_solution(d) == (u2, v2), d


def test_minimal_solution_examples():
    assert minimal_solution(PellProblem(20, 5)) == (5, 1)
    assert minimal_solution(PellProblem(24, 5)) is None
    assert minimal_solution(PellProblem(60, 5)) is None
    assert minimal_solution(PellProblem(6, 1)) == fundamental_solution(6)


def test_minimal_solution_validation():
    with pytest.raises(ValueError):
        minimal_solution(PellProblem(9, 5))  # square d
    with pytest.raises(ValueError):
        minimal_solution(PellProblem(6, 0))
    with pytest.raises(ValueError):
        minimal_solution(PellProblem(6, 10**6 + 1))


def test_minimal_solution_against_brute_force_grid():
    # dense little grid exercising both internal routes
    for d in nonsquares(30):
        for m in list(range(-20, 0)) + list(range(1, 21)):
            got = minimal_solution(PellProblem(d, m))
            want = brute_force_minimal(PellProblem(d, m), 30_000)
            if want is not None:
                assert got == want, (d, m)
            elif got is not None:
                assert got.x * got.x - d * got.y * got.y == m
                assert got.y > 30_000, (d, m)


def test_internal_routes_agree():
    # for 25 < d the value 5 is below sqrt(d): both strategies must coincide.
    # The class-bound scan range grows with the fundamental solution, so the
    # handful of d whose scan would exceed 250k steps are skipped.
    for d in nonsquares(300):
        if d <= 25:
            continue
        u, v = fundamental_solution(d)
        for m in (5, -4, 7):
            if m * m >= d:
                continue
            if isqrt(v * v * abs(m) // (2 * (u - 1))) > 250_000:
                continue
            assert _minimal_by_convergents(d, m) == _minimal_by_class_bound(d, m), (d, m)


def test_even_e_makes_45_unsolvable():
    # x^2 = 5 (mod 8) is impossible, so 4e = 0 (mod 8) kills the equation
    for e in range(2, 2001, 2):
        if is_square(4 * e):
            continue
        assert minimal_solution(PellProblem(4 * e, 5)) is None, e


def test_generate_solutions():
    assert generate_solutions(PellProblem(6, 1), PellSolution(5, 2), 2) == [(5, 2), (49, 20)]
    assert generate_solutions(PellProblem(2, -1), PellSolution(1, 1), 2) == [(1, 1), (7, 5)]
    assert generate_solutions(PellProblem(6, 1), PellSolution(5, 2), 1) == [(5, 2)]


def test_generate_solutions_exact_and_increasing():
    sols = generate_solutions(PellProblem(13, 3), PellSolution(4, 1), 8)
    xs = [s.x for s in sols]
    assert xs == sorted(set(xs))
    for x, y in sols:
        assert x * x - 13 * y * y == 3


def test_generate_rejects_bad_seed():
    with pytest.raises(ValueError):
        generate_solutions(PellProblem(6, 1), PellSolution(5, 3), 2)


def test_brute_force_examples():
    assert brute_force_minimal(PellProblem(6, 1), 100) == (5, 2)
    assert brute_force_minimal(PellProblem(24, 5), 100_000) is None
    assert brute_force_minimal(PellProblem(2, -1), 10) == (1, 1)


def test_brute_force_paths_agree():
    # the vectorized path and the scalar path are the same oracle
    from k3hilb.pell import _brute_scalar, _brute_vectorized

    for d in (6, 13, 61):
        for m in (1, -1, 5, -4):
            assert _brute_scalar(d, m, 5000) == _brute_vectorized(d, m, 5000), (d, m)


def test_fundamental_matches_brute_force():
    for d in nonsquares(120):
        want = brute_force_minimal(PellProblem(d, 1), 100_000)
        if want is not None:
            assert fundamental_solution(d) == want, d


def test_convergent_values_are_exact():
    it = convergents(7)
    seen = [next(it) for _ in range(12)]
    for p, q, v in seen:
        assert p * p - 7 * q * q == v


def test_square_d_minimal():
    assert square_d_minimal(4, 5) == (3, 1)
    assert square_d_minimal(16, 5) is None
    assert square_d_minimal(9, 16) == (5, 1)  # 25 - 9 = 16
    with pytest.raises(ValueError):
        square_d_minimal(8, 5)
    # agrees with a direct scan on a grid of square d
    for k in range(1, 9):
        d = k * k
        for m in list(range(-30, 0)) + list(range(1, 31)):
            want = None
            for y in range(1, 2000):
                t = m + d * y * y
                if t > 0:
                    r = isqrt(t)
                    if r * r == t:
                        want = (r, y)
                        break
            got = square_d_minimal(d, m)
            assert got == want, (d, m)
