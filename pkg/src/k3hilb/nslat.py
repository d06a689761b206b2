"""The rank-2 Picard lattice Z*h (+) Z*xi of a Hilbert square, with Gram
matrix diag(2e, -2), its isometries, their discriminant actions, and the
exact slopes of the nef and movable cone walls.

Matrices are 2x2 integer tuples read column-as-image: column 0 is the image
of h, column 1 the image of xi, both in (h, xi) coordinates.  Cone walls are
kept as primitive integer vectors in the same coordinates, compared as rays
(equality up to a positive scalar).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .disc import InducedAction, Mat2
from .errors import ConsistencyError
from .pell import PellProblem, fundamental_solution, is_square, minimal_solution, square_d_minimal

Vec2 = tuple[int, int]

_ID: Mat2 = ((1, 0), (0, 1))


def _mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _neg(a: Mat2) -> Mat2:
    return ((-a[0][0], -a[0][1]), (-a[1][0], -a[1][1]))


def _matvec(a: Mat2, v: Vec2) -> Vec2:
    return (a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1])


def gram(e: int) -> Mat2:
    """Gram matrix of Z*h (+) Z*xi: h^2 = 2e, xi^2 = -2, h.xi = 0."""
    if e < 1:
        raise ValueError("need e >= 1")
    return ((2 * e, 0), (0, -2))


def is_isometry(e: int, m: Mat2) -> bool:
    """True iff m^T G m = G for the Gram matrix G = diag(2e, -2)."""
    g = gram(e)
    mt = ((m[0][0], m[1][0]), (m[0][1], m[1][1]))
    return _mul(mt, _mul(g, m)) == g


def theta(e: int) -> Mat2:
    """The hyperbolic generator [[U, V], [eV, U]] built from the fundamental
    solution of x^2 - e*y^2 = 1; only defined for non-square e."""
    if e < 1:
        raise ValueError("need e >= 1")
    if is_square(e):
        raise ValueError(f"theta undefined: e = {e} is a perfect square")
    U, V = fundamental_solution(e)
    m = ((U, V), (e * V, U))
    if not is_isometry(e, m):
        raise ConsistencyError("theta failed the Gram identity")
    return m


def alpha() -> Mat2:
    """The reflection fixing h and negating xi."""
    return ((1, 0), (0, -1))


def beta(e: int) -> Mat2:
    """The involution alpha*theta: the only nontrivial isometry preserving the
    movable cone (non-square e)."""
    return _mul(alpha(), theta(e))


def induced_action(e: int, m: Mat2) -> InducedAction:
    """Action of an isometry on the discriminant group (Z/2e) x (Z/2).

    Applying m rationally to the dual generators h/2e and xi/2 gives
    h/2e -> m00*(h/2e) + (m10/e)*(xi/2)  and
    xi/2 -> (e*m01)*(h/2e) + m11*(xi/2);
    m10 is always divisible by e for a genuine isometry.
    """
    if not is_isometry(e, m):
        raise ValueError("not an isometry of diag(2e, -2)")
    if m[1][0] % e != 0:
        raise ConsistencyError("isometry image of h/2e left the discriminant group")
    mod = 2 * e
    row0 = (m[0][0] % mod, (e * m[0][1]) % mod)
    row1 = ((m[1][0] // e) % 2, m[1][1] % 2)
    return InducedAction(e, (row0, row1))


@dataclass(frozen=True)
class Slopes:
    """Exact wall slopes: nef cone walls h and h - nu*xi, movable cone walls
    h and h - mu*xi."""

    nu: Fraction
    mu: Fraction


@lru_cache(maxsize=None)
def slopes(e: int) -> Slopes:
    """Wall slopes of the nef and movable cones of the Hilbert square.

    The movable slope is e*b1/a1 from the minimal solution of
    x^2 - e*y^2 = 1, degenerating to sqrt(e) (an integer) when e is square.
    The nef slope drops to 2e*b5/a5 when x^2 - 4e*y^2 = 5 is solvable,
    otherwise the cones coincide.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    if is_square(e):
        mu = Fraction(isqrt(e))
        p45 = square_d_minimal(4 * e, 5)  # solvable only for e = 1
    else:
        a1, b1 = fundamental_solution(e)
        mu = Fraction(e * b1, a1)
        p45 = minimal_solution(PellProblem(4 * e, 5))
    nu = Fraction(2 * e * p45.y, p45.x) if p45 is not None else mu
    if not 0 < nu <= mu:
        raise ConsistencyError(f"slopes out of order for e = {e}: nu = {nu}, mu = {mu}")
    if p45 is not None and nu == mu:
        raise ConsistencyError(f"e = {e}: solvable x^2-4ey^2=5 must separate the walls")
    return Slopes(nu, mu)


def _ray(v: Vec2) -> Vec2:
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise ValueError("zero vector spans no ray")
    return (v[0] // g, v[1] // g)


def _wall_vector(slope: Fraction) -> Vec2:
    # h - slope*xi cleared to a primitive integer vector
    return _ray((slope.denominator, -slope.numerator))


def ample_wall_rays(e: int) -> tuple[Vec2, Vec2]:
    """Primitive vectors spanning the two nef-cone walls, h first."""
    return (1, 0), _wall_vector(slopes(e).nu)


def movable_wall_rays(e: int) -> tuple[Vec2, Vec2]:
    """Primitive vectors spanning the two movable-cone walls, h first."""
    return (1, 0), _wall_vector(slopes(e).mu)


def _preserves_walls(e: int, m: Mat2, walls: tuple[Vec2, Vec2]) -> bool:
    if not is_isometry(e, m):
        raise ValueError("not an isometry of diag(2e, -2)")
    image = {_ray(_matvec(m, w)) for w in walls}
    return image == set(walls)


def preserves_movable(e: int, m: Mat2) -> bool:
    """Does m map the movable cone onto itself (walls preserved as rays)?"""
    return _preserves_walls(e, m, movable_wall_rays(e))


def preserves_ample(e: int, m: Mat2) -> bool:
    """Does m map the ample (nef) cone onto itself?"""
    return _preserves_walls(e, m, ample_wall_rays(e))


def isometry_group_elements(e: int, k_max: int = 6) -> list[Mat2]:
    """The isometries {+-theta^k, +-alpha*theta^k : |k| <= k_max}, deduplicated.

    For square e the group degenerates to {+-id, +-alpha}.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    al = alpha()
    if is_square(e):
        words = [_ID, al]
    else:
        th = theta(e)
        U, V = fundamental_solution(e)
        th_inv = ((U, -V), (-e * V, U))
        powers = [_ID]
        for _ in range(k_max):
            powers.append(_mul(th, powers[-1]))
        for _ in range(k_max):
            powers.insert(0, _mul(th_inv, powers[0]))
        words = powers + [_mul(al, p) for p in powers]
    out = []
    seen = set()
    for w in words:
        for m in (w, _neg(w)):
            if m not in seen:
                seen.add(m)
                out.append(m)
    return out
