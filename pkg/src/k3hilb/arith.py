"""Exact integer utilities: factorization, perfect squares, 2-torsion of unit
groups, and square roots of unity modulo 4e.

All functions are pure and use arbitrary-precision integers only.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import ConsistencyError

FACTOR_CAP = 10**12

# Witnesses making Miller-Rabin deterministic far beyond FACTOR_CAP.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """n written as a product of prime powers, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, k in self.factors:
            if p <= last or k < 1:
                raise ValueError("factors must be (prime, exponent) with primes increasing")
            last = p
            prod *= p**k
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def distinct_primes(self) -> int:
        return len(self.factors)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers everything we factor)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> Factorization:
    """Factor 1 <= n <= 10**12 by trial division.

    The cap keeps the divisor scan below 10**6; any cofactor surviving the
    scan is prime, which is double-checked rather than assumed.
    """
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    if n > FACTOR_CAP:
        raise ValueError(f"factorize is capped at n <= {FACTOR_CAP}")
    factors = []
    rest = n
    for p in (2, 3, 5):
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            factors.append((p, k))
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)  # steps through numbers coprime to 2,3,5
    i = 0
    while p * p <= rest:
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            factors.append((p, k))
        p += wheel[i]
        i = (i + 1) % 8
    if rest > 1:
        if not is_probable_prime(rest):
            raise ConsistencyError(f"cofactor {rest} survived trial division but is composite")
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def p_of_e(e: int) -> int:
    """Number of distinct primes dividing e, with the convention p(1) = 1."""
    if e < 1:
        raise ValueError("need e >= 1")
    if e == 1:
        return 1
    return factorize(e).distinct_primes


def is_perfect_square(n: int) -> tuple[bool, int]:
    """Return (n is a square, isqrt(n)); the root is exact when the flag is True."""
    if n < 0:
        raise ValueError("need n >= 0")
    r = isqrt(n)
    return r * r == n, r


def two_torsion_count(n: int) -> int:
    """Number of x in (Z/nZ)* with x**2 = 1.

    Multiplicative over the prime-power decomposition: the factor is 1 for
    2**1, 2 for 2**2, 4 for 2**k with k >= 3, and 2 for every odd prime power.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    count = 1
    for p, k in factorize(n).factors:
        if p == 2:
            count *= 1 if k == 1 else (2 if k == 2 else 4)
        else:
            count *= 2
    return count


def square_roots_of_unity(e: int) -> list[int]:
    """All a in Z/2eZ with a**2 = 1 (mod 4e), sorted.

    Well defined on residues mod 2e since (a + 2e)**2 = a**2 (mod 4e); each
    residue mod 2e therefore lifts to exactly two solutions mod 4e, which the
    2-torsion cross-check exploits.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    mod = 4 * e
    roots = [a for a in range(2 * e) if (a * a - 1) % mod == 0]
    if len(roots) * 2 != two_torsion_count(mod):
        raise ConsistencyError(
            f"square roots of unity mod {mod}: enumeration found {len(roots)}, "
            f"2-torsion count predicts {two_torsion_count(mod) // 2}"
        )
    for a in roots:
        if gcd(a, 2 * e) != 1:
            raise ConsistencyError(f"non-unit {a} passed the unity test mod {mod}")
    return roots
