"""Cyclic discriminant forms with values in Q/2Z, and the isotropic subgroups
that glue the rank-21 transcendental lattice to the Picard lattice of a
Hilbert square.

The groups in play are all cyclic: the transcendental side contributes a
generator of order 2e with q = -1/2e, the polarization side one of order 2e
with q = 1/2e, and the exceptional half-diagonal one of order 2 with
q = -1/2.  A glueing generator (t/2e, a*h/2e, z*xi/2) is stored as
IsotropicGenerator(e, a, z), normalized so the transcendental coordinate is
+1; subgroup equality is then plain tuple equality.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import p_of_e
from .errors import ConsistencyError

Mat2 = tuple[tuple[int, int], tuple[int, int]]


def qmod2(value: Fraction) -> Fraction:
    """Canonical representative of a rational in Q/2Z, reduced into [0, 2)."""
    return value % 2


@dataclass(frozen=True)
class DiscGroupSpec:
    """Cyclic group of the given order with q(generator) = gen_q in Q/2Z."""

    order: int
    gen_q: Fraction

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.gen_q != qmod2(self.gen_q):
            raise ValueError("gen_q must be reduced into [0, 2)")
        n = self.order
        # q((k+n)g) == q(kg) in Q/2Z for all k needs n^2*q and 2n*q in 2Z
        if qmod2(n * n * self.gen_q) != 0 or qmod2(2 * n * self.gen_q) != 0:
            raise ValueError("gen_q is inconsistent with the group order")


def transcendental_group(e: int) -> DiscGroupSpec:
    return DiscGroupSpec(2 * e, qmod2(Fraction(-1, 2 * e)))


def polarization_group(e: int) -> DiscGroupSpec:
    return DiscGroupSpec(2 * e, Fraction(1, 2 * e))


def exceptional_group() -> DiscGroupSpec:
    return DiscGroupSpec(2, qmod2(Fraction(-1, 2)))


def q_of(k: int, group: DiscGroupSpec) -> Fraction:
    """Value of the quadratic form on k times the generator."""
    return qmod2(k * k * group.gen_q)


def check_isotropic(e: int, a: int, z: int) -> bool:
    """Does q vanish on (t/2e, a*h/2e, z*xi/2)?

    The sum -1/2e + a^2/2e - z^2/2 lies in 2Z exactly when
    a^2 - e*z^2 = 1 (mod 4e); vanishing on the generator forces vanishing
    on the whole cyclic subgroup.
    """
    return (a * a - e * z * z - 1) % (4 * e) == 0


@dataclass(frozen=True)
class IsotropicGenerator:
    """Generator (t/2e, a*h/2e, z*xi/2) of an isotropic subgroup, a mod 2e, z mod 2."""

    e: int
    a: int
    z: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("need e >= 1")
        if not 0 <= self.a < 2 * self.e or self.z not in (0, 1):
            raise ValueError("generator coordinates out of range")
        if not check_isotropic(self.e, self.a, self.z):
            raise ValueError(f"(a, z) = ({self.a}, {self.z}) is not isotropic for e = {self.e}")

    def label(self) -> str:
        return f"J_{self.a}" if self.z == 0 else f"J_{self.a}[z=1]"


def enumerate_I(e: int) -> list[IsotropicGenerator]:
    """The z = 0 subgroups: a**2 = 1 (mod 4e), sorted by a.

    These index the Fourier-Mukai partners of the underlying K3 surface.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    mod = 4 * e
    return [IsotropicGenerator(e, a, 0) for a in range(2 * e) if (a * a - 1) % mod == 0]


def enumerate_J(e: int) -> list[IsotropicGenerator]:
    """All isotropic generators (both z values), sorted by (z, a)."""
    if e < 1:
        raise ValueError("need e >= 1")
    out = list(enumerate_I(e))
    mod = 4 * e
    target = (1 + e) % mod
    out += [IsotropicGenerator(e, a, 1) for a in range(2 * e) if (a * a) % mod == target]
    return out


def overlattice_check(dis_e1: int, dis_e2: int, subgroup_order: int) -> int:
    """Discriminant of the overlattice glued from an isotropic subgroup.

    dis(glued) = dis(E1 (+) E2) / order**2; a unimodular glueing needs +-1
    and the Hilbert-square glueing needs +-2.
    """
    if dis_e1 == 0 or dis_e2 == 0:
        raise ValueError("discriminants must be nonzero")
    if subgroup_order < 1:
        raise ValueError("subgroup order must be >= 1")
    prod = dis_e1 * dis_e2
    sq = subgroup_order * subgroup_order
    if prod % sq != 0:
        raise ValueError(f"{subgroup_order}^2 does not divide dis = {prod}")
    return prod // sq


def fm_partner_count(e: int) -> tuple[int, list[tuple[int, ...]]]:
    """Number of Fourier-Mukai partner classes, with the orbits realizing it.

    Counts orbits of the z = 0 subgroups under a -> -a (the glueings of
    +-id with +-id) and checks the result against 2**(p(e)-1).
    """
    gens = enumerate_I(e)
    mod = 2 * e
    seen = set()
    orbits = []
    for g in gens:
        if g.a in seen:
            continue
        orbit = tuple(sorted({g.a, (-g.a) % mod}))
        seen.update(orbit)
        orbits.append(orbit)
    expected = 2 ** (p_of_e(e) - 1)
    if len(orbits) != expected:
        raise ConsistencyError(
            f"e = {e}: {len(orbits)} partner orbits but 2^(p-1) = {expected}"
        )
    return len(orbits), orbits


@dataclass(frozen=True)
class InducedAction:
    """Residue matrix acting on (Z/2e) x (Z/2) in the basis (h/2e, xi/2).

    Row 0 is taken mod 2e, row 1 mod 2.  The (0, 1) entry is always a
    multiple of e (the h/2e-component of the image of xi/2), which is what
    makes composition of reduced matrices well defined.
    """

    e: int
    mbar: Mat2

    def __post_init__(self):
        (m00, m01), (m10, m11) = self.mbar
        mod = 2 * self.e
        if not (0 <= m00 < mod and 0 <= m01 < mod and 0 <= m10 < 2 and 0 <= m11 < 2):
            raise ValueError("entries must be reduced: row 0 mod 2e, row 1 mod 2")
        if m01 % self.e != 0:
            raise ValueError("the (0,1) entry must be a multiple of e")

    @staticmethod
    def identity(e: int) -> "InducedAction":
        return InducedAction(e, ((1, 0), (0, 1)))

    def compose(self, other: "InducedAction") -> "InducedAction":
        if self.e != other.e:
            raise ValueError("mismatched e")
        a, b = self.mbar
        c, d = other.mbar
        mod = 2 * self.e
        row0 = ((a[0] * c[0] + a[1] * d[0]) % mod, (a[0] * c[1] + a[1] * d[1]) % mod)
        row1 = ((b[0] * c[0] + b[1] * d[0]) % 2, (b[0] * c[1] + b[1] * d[1]) % 2)
        return InducedAction(self.e, (row0, row1))

    def is_identity(self) -> bool:
        return self.mbar == ((1, 0), (0, 1))


def glued_action(sign: int, action: InducedAction, j: IsotropicGenerator) -> IsotropicGenerator:
    """Apply (sign * id on the transcendental side, action on the Picard side).

    The image generator is renormalized to transcendental coordinate +1 by
    negating when sign = -1, so the result is again a canonical subgroup
    label.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if action.e != j.e:
        raise ValueError(f"action is for e = {action.e}, generator for e = {j.e}")
    mod = 2 * j.e
    (m00, m01), (m10, m11) = action.mbar
    a = (m00 * j.a + m01 * j.z) % mod
    z = (m10 * j.a + m11 * j.z) % 2
    if sign == -1:
        a = (-a) % mod  # (-z) % 2 == z
    return IsotropicGenerator(j.e, a, z)
