"""Exact solvers for Pell-type equations x**2 - d*y**2 = m.

The continued-fraction expansion of sqrt(d) is computed with integer state
only; convergents deliver the fundamental unit, decide the negative equation,
and (for |m| < sqrt(d)) locate every primitive solution of the general
equation.  For larger |m| a bounded scan over class representatives is used.
No floating point enters any decision; the brute-force oracle uses a float
square root only to propose candidates that are then re-verified exactly.
"""

from functools import lru_cache
from math import isqrt
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .errors import ConsistencyError

MAX_ABS_M = 10**6

_OBSTRUCTION_MODULI = (8, 16, 9, 5, 7, 11, 13)
_CHUNK = 1 << 19


class PellProblem(NamedTuple):
    d: int
    m: int


class PellSolution(NamedTuple):
    x: int
    y: int


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _require_nonsquare(d: int):
    if d < 2 or is_square(d):
        raise ValueError(f"d = {d} must be a non-square integer >= 2")


def convergents(d: int) -> Iterator[tuple[int, int, int]]:
    """Yield (p, q, p*p - d*q*q) along the convergents p/q of sqrt(d)."""
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError("sqrt(d) is rational, no continued fraction")
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    yield p, q, p * p - d
    m, den, a = 0, 1, a0
    while True:
        m = a * den - m
        den = (d - m * m) // den  # divisibility is exact along the expansion
        a = (a0 + m) // den
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q, p * p - d * q * q


@lru_cache(maxsize=None)
def fundamental_solution(d: int) -> PellSolution:
    """Minimal positive solution (U, V) of x**2 - d*y**2 = 1.

    U + V*sqrt(d) is the fundamental unit generating all solutions.
    """
    _require_nonsquare(d)
    for p, q, v in convergents(d):
        if v == 1:
            return PellSolution(p, q)
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def negative_pell(d: int) -> Optional[PellSolution]:
    """Minimal positive solution of x**2 - d*y**2 = -1, or None.

    A solution exists iff -1 shows up among the convergent values before the
    first +1; the fundamental unit is then its square.
    """
    _require_nonsquare(d)
    for p, q, v in convergents(d):
        if v == -1:
            return PellSolution(p, q)
        if v == 1:
            return None
    raise AssertionError("unreachable")


def _squares_mod(mod: int) -> frozenset[int]:
    return frozenset((x * x) % mod for x in range(mod))


@lru_cache(maxsize=None)
def _square_table(mod: int) -> frozenset[int]:
    return _squares_mod(mod)


def _locally_obstructed(d: int, m: int) -> bool:
    """True when x**2 - d*y**2 = m fails modulo one of a few small moduli."""
    for mod in _OBSTRUCTION_MODULI:
        squares = _square_table(mod)
        if not any((m + d * y * y) % mod in squares for y in range(mod)):
            return True
    return False


def _divisor_square_targets(m: int) -> dict[int, int]:
    """Map m // g**2 -> smallest such g, over all g with g**2 | m."""
    targets = {}
    g = 1
    while g * g <= abs(m):
        if m % (g * g) == 0:
            targets.setdefault(m // (g * g), g)
        g += 1
    return targets


def _minimal_by_convergents(d: int, m: int) -> Optional[PellSolution]:
    # Valid when |m| < sqrt(d): every primitive positive solution of
    # x**2 - d*y**2 = m/g**2 appears among the convergents of sqrt(d),
    # and all values recur before the first +1.
    targets = _divisor_square_targets(m)
    best = None
    for p, q, v in convergents(d):
        if v in targets:
            g = targets[v]
            if best is None or g * p < best.x:
                best = PellSolution(g * p, g * q)
        if v == 1:
            break
    return best


def _minimal_by_class_bound(d: int, m: int) -> Optional[PellSolution]:
    # Every solution class contains a representative with
    # 2*(U -+ 1)*y**2 <= V**2*|m| (sign of m picks -+); scan that range,
    # then walk each representative into the positive quadrant by unit
    # multiplication and keep the smallest x.
    U, V = fundamental_solution(d)
    denom = 2 * (U + 1) if m > 0 else 2 * (U - 1)
    lim = V * V * abs(m)
    reps = []
    y = 0
    while denom * y * y <= lim or y <= 1:
        t = m + d * y * y
        if t >= 0:
            r = isqrt(t)
            if r * r == t:
                reps.append((r, y))
        y += 1
    best = None
    for x0, y0 in reps:
        for x in {x0, -x0}:
            xx, yy = x, y0
            if not (xx >= 0 or d * yy * yy > xx * xx):  # value x + y*sqrt(d) <= 0
                xx, yy = -xx, -yy
            steps = 0
            while xx <= 0 or yy <= 0:
                xx, yy = xx * U + yy * d * V, xx * V + yy * U
                steps += 1
                if steps > 10_000:
                    raise ConsistencyError("unit multiplication failed to reach positivity")
            if xx * xx - d * yy * yy != m:
                raise ConsistencyError("class representative lost the defining equation")
            if best is None or xx < best.x:
                best = PellSolution(xx, yy)
    return best


@lru_cache(maxsize=None)
def _minimal_nonsquare(d: int, m: int) -> Optional[PellSolution]:
    if m == 1:
        return fundamental_solution(d)
    if m == -1:
        return negative_pell(d)
    if _locally_obstructed(d, m):
        return None
    if m * m < d:
        return _minimal_by_convergents(d, m)
    return _minimal_by_class_bound(d, m)


def minimal_solution(problem: PellProblem) -> Optional[PellSolution]:
    """Minimal positive solution (x, y > 0, x smallest) of x**2 - d*y**2 = m.

    Returns None when the equation has no positive solution.  Trivial y = 0
    solutions (m a perfect square) do not count as positive.
    """
    d, m = problem
    _require_nonsquare(d)
    if m == 0:
        raise ValueError("m must be nonzero")
    if abs(m) > MAX_ABS_M:
        raise ValueError(f"|m| is capped at {MAX_ABS_M}")
    return _minimal_nonsquare(d, m)


def square_d_minimal(d: int, m: int) -> Optional[PellSolution]:
    """Minimal positive solution of x**2 - d*y**2 = m when d is a perfect square.

    With k = sqrt(d) the equation factors as (x - k*y)(x + k*y) = m, so the
    finitely many divisor splittings of m decide everything.
    """
    k = isqrt(d)
    if d < 1 or k * k != d:
        raise ValueError(f"d = {d} must be a positive perfect square")
    if m == 0:
        raise ValueError("m must be nonzero")
    divisors = []
    g = 1
    while g * g <= abs(m):
        if m % g == 0:
            divisors += [g, -g, m // g, -(m // g)]
        g += 1
    best = None
    for s in set(divisors):
        t = m // s
        if s * t != m or (s + t) % 2 != 0:
            continue
        x = (s + t) // 2
        num = t - s
        if x <= 0 or num <= 0 or num % (2 * k) != 0:
            continue
        y = num // (2 * k)
        if best is None or x < best.x:
            best = PellSolution(x, y)
    return best


def generate_solutions(problem: PellProblem, seed: PellSolution, count: int) -> list[PellSolution]:
    """First `count` solutions from `seed` under multiplication by the unit.

    (x + y*sqrt(d)) * (U + V*sqrt(d)) = (x*U + y*d*V) + (x*V + y*U)*sqrt(d),
    so each step preserves the defining equation exactly and increases x.
    """
    d, m = problem
    _require_nonsquare(d)
    if count < 1:
        raise ValueError("count must be >= 1")
    x, y = seed
    if x * x - d * y * y != m:
        raise ValueError(f"seed {seed!r} does not solve x^2 - {d}y^2 = {m}")
    U, V = fundamental_solution(d)
    out = [PellSolution(x, y)]
    while len(out) < count:
        x, y = x * U + y * d * V, x * V + y * U
        if x * x - d * y * y != m or x <= out[-1].x:
            raise ConsistencyError("unit multiplication broke the solution chain")
        out.append(PellSolution(x, y))
    return out


def brute_force_minimal(problem: PellProblem, y_bound: int) -> Optional[PellSolution]:
    """Exhaustive scan y = 0..y_bound for the minimal positive solution.

    Test-suite ground truth: no continued fractions, no class theory.  The
    vectorized path proposes square roots in float64 but every returned pair
    is re-verified with exact integer arithmetic before it is accepted.
    """
    d, m = problem
    if d < 1:
        raise ValueError("need d >= 1")
    if m == 0:
        raise ValueError("m must be nonzero")
    if y_bound < 1:
        raise ValueError("need y_bound >= 1")
    top = m + d * y_bound * y_bound
    if top <= 2**52:
        return _brute_vectorized(d, m, y_bound)
    return _brute_scalar(d, m, y_bound)


def _brute_scalar(d: int, m: int, y_bound: int) -> Optional[PellSolution]:
    for y in range(y_bound + 1):
        t = m + d * y * y
        if t <= 0 or y == 0:
            continue
        r = isqrt(t)
        if r * r == t and r > 0:
            return PellSolution(r, y)
    return None


def _brute_vectorized(d: int, m: int, y_bound: int) -> Optional[PellSolution]:
    for start in range(0, y_bound + 1, _CHUNK):
        ys = np.arange(start, min(start + _CHUNK, y_bound + 1), dtype=np.int64)
        ts = m + d * ys * ys
        safe = np.where(ts > 0, ts, 1)
        r = np.rint(np.sqrt(safe.astype(np.float64))).astype(np.int64)
        hit = (ts > 0) & (ys > 0) & (
            (r * r == ts) | ((r - 1) * (r - 1) == ts) | ((r + 1) * (r + 1) == ts)
        )
        idx = np.nonzero(hit)[0]
        if idx.size:
            y = int(ys[idx[0]])
            t = m + d * y * y
            root = isqrt(t)
            if root * root != t or root <= 0:
                raise ConsistencyError("vectorized scan proposed a non-square")
            return PellSolution(root, y)
    return None
