"""Headline decisions for the Hilbert square of a degree-2e K3 surface of
Picard rank one: existence of extra Hodge isometries between partner squares,
strong ambiguity, and the automorphism group order.

Every decision is computed twice: once from the closed-form Pell criteria and
once by an independent orbit computation on the isotropic subgroups under the
finite induced isometry group.  `analyze` insists the two routes agree and
raises ConsistencyError otherwise.
"""

from dataclasses import dataclass
from typing import Optional

from .arith import factorize, p_of_e
from .disc import InducedAction, IsotropicGenerator, enumerate_J, fm_partner_count, glued_action
from .errors import ConsistencyError
from .nslat import Slopes, alpha, beta, induced_action, preserves_ample, slopes, theta
from .pell import (
    PellProblem,
    PellSolution,
    fundamental_solution,
    is_square,
    minimal_solution,
    negative_pell,
    square_d_minimal,
)

GluedPair = tuple[int, InducedAction]


def _solve_4e5(e: int) -> Optional[PellSolution]:
    # 4e is a square exactly when e is; the factoring solver covers that case
    if is_square(e):
        return square_d_minimal(4 * e, 5)
    return minimal_solution(PellProblem(4 * e, 5))


def hodge_isometry_exists(e: int) -> bool:
    """Is some partner square Hodge-isometric to a non-isomorphic one?

    Criterion: x^2 - e*y^2 = 1 has minimal solution (U, V) with V even and
    U != -1 (mod 2e).  Always false for square e.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    if is_square(e):
        return False
    U, V = fundamental_solution(e)
    return V % 2 == 0 and U % (2 * e) != 2 * e - 1


@dataclass(frozen=True)
class AmbiguityDecision:
    """Strong-ambiguity verdict with the Pell evidence that produced it."""

    holds: bool
    pell1: Optional[PellSolution]
    pell45: Optional[PellSolution]
    witness: Optional[tuple[int, int]]  # (a, a*U mod 2e) for a pair of merged subgroups


def strong_ambiguity(e: int) -> AmbiguityDecision:
    """Does some non-isomorphic partner surface have an isomorphic Hilbert square?

    Holds iff hodge_isometry_exists(e) and x^2 - 4e*y^2 = 5 is unsolvable
    (the movable cone then equals the ample cone, making the glued isometry
    effective).
    """
    if e < 1:
        raise ValueError("need e >= 1")
    pell1 = None if is_square(e) else fundamental_solution(e)
    pell45 = _solve_4e5(e)
    holds = hodge_isometry_exists(e) and pell45 is None
    witness = None
    if holds:
        U = pell1.x
        witness = (1, U % (2 * e))
    return AmbiguityDecision(holds, pell1, pell45, witness)


def aut_order(e: int) -> int:
    """Order of the automorphism group of the Hilbert square: 1 or 2.

    2 iff e is not a square, x^2 - e*y^2 = -1 is solvable, and
    x^2 - 4e*y^2 = 5 is not.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    if is_square(e):
        return 1
    if negative_pell(e) is None:
        return 1
    return 2 if minimal_solution(PellProblem(4 * e, 5)) is None else 1


def _closure(e: int, generators: list[GluedPair]) -> list[GluedPair]:
    """Close signed discriminant actions under composition (always finite)."""
    seen = {(s, a.mbar): (s, a) for s, a in generators}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for s1, a1 in generators:
            for s2, a2 in frontier:
                s, a = s1 * s2, a1.compose(a2)
                key = (s, a.mbar)
                if key not in seen:
                    seen[key] = (s, a)
                    nxt.append((s, a))
        frontier = nxt
    return sorted(seen.values(), key=lambda p: (p[0], p[1].mbar))


def _orbits(points: list[int], merge: list[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    parent = {p: p for p in points}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in merge:
        parent[find(a)] = find(b)
    buckets: dict[int, list[int]] = {}
    for p in points:
        buckets.setdefault(find(p), []).append(p)
    return tuple(tuple(sorted(b)) for b in sorted(buckets.values(), key=min))


@dataclass
class OrbitAnalysis:
    """Orbit structure of the z = 0 isotropic subgroups for one e."""

    e: int
    js: tuple[IsotropicGenerator, ...]
    z0: tuple[int, ...]
    z1: tuple[int, ...]
    arrows: dict[str, tuple[tuple[tuple[int, int], tuple[int, int]], ...]]
    hodge_orbits: tuple[tuple[int, ...], ...]
    effective_orbits: tuple[tuple[int, ...], ...]
    hodge_orbit_count: int
    hodge_classes: int
    beta_effective: bool
    stabilizer: tuple[GluedPair, ...]
    aut_nontrivial: bool


def orbit_analysis(e: int) -> OrbitAnalysis:
    """Orbits of the z = 0 subgroups under the full induced isometry group and
    under its cone-preserving part.

    Images that land at z = 1 never identify two Hilbert squares and are
    excluded from merging (they remain visible in the arrow table).  The
    cone-preserving part is {id, beta} when the nef and movable cones agree,
    else {id}; the automorphism witness is the glueing of -id with beta, so
    the stabilizer test asks for a fixing pair whose Picard-side action is
    not the identity.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    js = tuple(enumerate_J(e))
    z0 = tuple(g.a for g in js if g.z == 0)
    z1 = tuple(g.a for g in js if g.z == 1)
    ident = InducedAction.identity(e)
    neg = induced_action(e, ((-1, 0), (0, -1)))
    gens: list[GluedPair] = [(1, ident), (-1, ident), (1, induced_action(e, alpha())), (1, neg)]
    square = is_square(e)
    if not square:
        gens.append((1, induced_action(e, theta(e))))
    group = _closure(e, gens)

    def merges(pairs):
        out = []
        for s, act in pairs:
            for a in z0:
                img = glued_action(s, act, IsotropicGenerator(e, a, 0))
                if img.z == 0:
                    out.append((a, img.a))
        return out

    hodge_orbits = _orbits(list(z0), merges(group))

    beta_eff = (not square) and preserves_ample(e, beta(e))
    eff_gens: list[GluedPair] = [(1, ident), (-1, ident)]
    if beta_eff:
        bbar = induced_action(e, beta(e))
        eff_gens += [(1, bbar), (-1, bbar)]
    eff_group = _closure(e, eff_gens)
    effective_orbits = _orbits(list(z0), merges(eff_group))

    j1 = IsotropicGenerator(e, 1 % (2 * e), 0)
    stabilizer = tuple(
        (s, act) for s, act in eff_group if glued_action(s, act, j1) == j1
    )
    aut_nontrivial = any(not act.is_identity() for _, act in stabilizer)

    arrows = {}
    show = [("negation", (-1, ident))]
    if not square:
        show.insert(0, ("theta_bar", (1, induced_action(e, theta(e)))))
    for name, (s, act) in show:
        rows = []
        for g in js:
            img = glued_action(s, act, g)
            rows.append(((g.a, g.z), (img.a, img.z)))
        arrows[name] = tuple(rows)

    return OrbitAnalysis(
        e=e,
        js=js,
        z0=z0,
        z1=z1,
        arrows=arrows,
        hodge_orbits=hodge_orbits,
        effective_orbits=effective_orbits,
        hodge_orbit_count=len(hodge_orbits),
        hodge_classes=len(effective_orbits),
        beta_effective=beta_eff,
        stabilizer=stabilizer,
        aut_nontrivial=aut_nontrivial,
    )


@dataclass(frozen=True)
class OrbitRecord:
    """One merged class of z = 0 subgroups; effective means the whole class is
    connected by cone-preserving isometries (so the Hilbert squares are
    actually isomorphic, not just Hodge-isometric)."""

    members: tuple[int, ...]
    effective: bool


@dataclass(frozen=True)
class Verdict:
    """Full analysis record for one polarization degree."""

    e: int
    p_e: int
    fm_count: int
    fm_orbits: tuple[tuple[int, ...], ...]
    pell1: Optional[PellSolution]
    pell_neg: Optional[PellSolution]
    pell45: Optional[PellSolution]
    slopes: Slopes
    strongly_ambiguous: bool
    ambiguity_witness: Optional[tuple[int, int]]
    aut_order: int
    hodge_classes: int
    hodge_orbit_count: int
    orbit_table: tuple[OrbitRecord, ...]


def analyze(e: int) -> Verdict:
    """Compute every verdict for one e and cross-check criteria against orbits.

    Raises ConsistencyError (an implementation bug, never bad input) when the
    closed-form criteria and the orbit computation disagree.
    """
    if e < 1:
        raise ValueError("need e >= 1")
    square = is_square(e)
    count, fm_orbits = fm_partner_count(e)
    amb = strong_ambiguity(e)
    aut = aut_order(e)
    oa = orbit_analysis(e)

    if amb.holds != (oa.hodge_classes < count):
        raise ConsistencyError(
            f"e = {e}: ambiguity criterion says {amb.holds}, orbits say "
            f"{oa.hodge_classes} classes of {count} partners"
        )
    if (aut == 2) != oa.aut_nontrivial:
        raise ConsistencyError(
            f"e = {e}: automorphism criterion says order {aut}, stabilizer "
            f"{'has' if oa.aut_nontrivial else 'lacks'} a nontrivial element"
        )
    if hodge_isometry_exists(e) != (oa.hodge_orbit_count < count):
        raise ConsistencyError(
            f"e = {e}: Hodge-isometry criterion disagrees with the full orbit count"
        )
    if oa.hodge_classes > count or (amb.holds and count < 2):
        raise ConsistencyError(f"e = {e}: orbit counts violate basic bounds")

    effective_sets = set(oa.effective_orbits)
    table = tuple(
        OrbitRecord(members=orbit, effective=orbit in effective_sets)
        for orbit in oa.hodge_orbits
    )
    return Verdict(
        e=e,
        p_e=p_of_e(e),
        fm_count=count,
        fm_orbits=tuple(fm_orbits),
        pell1=None if square else fundamental_solution(e),
        pell_neg=None if square else negative_pell(e),
        pell45=amb.pell45,
        slopes=slopes(e),
        strongly_ambiguous=amb.holds,
        ambiguity_witness=amb.witness,
        aut_order=aut,
        hodge_classes=oa.hodge_classes,
        hodge_orbit_count=oa.hodge_orbit_count,
        orbit_table=table,
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: Optional[bool]  # None = not applicable for this e
    detail: str


def consistency_check(e: int) -> list[CheckResult]:
    """Supporting facts tying the Pell data together, evaluated directly.

    (i)  V even implies U != 1 (mod 2e);
    (ii) V even and U = -1 (mod 2e) iff x^2 - e*y^2 = -1 is solvable;
    (iii) prime-power e implies V odd or x^2 - e*y^2 = -1 solvable;
    (iv) square or prime-power e implies no strong ambiguity.
    The Pell-based items (i)-(iii) are skipped for square e.
    """
    if e < 2:
        raise ValueError("need e >= 2")
    square = is_square(e)
    prime_power = len(factorize(e).factors) == 1
    out = []
    if square:
        for name in ("v_even_u_not_1", "neg_pell_iff_u_minus_1", "prime_power_parity"):
            out.append(CheckResult(name, None, "skipped: e is a perfect square"))
    else:
        U, V = fundamental_solution(e)
        neg = negative_pell(e)
        mod = 2 * e
        detail = f"(U, V) = ({U}, {V}), U mod 2e = {U % mod}, neg = {neg}"
        out.append(
            CheckResult("v_even_u_not_1", V % 2 == 1 or U % mod != 1, detail)
        )
        out.append(
            CheckResult(
                "neg_pell_iff_u_minus_1",
                ((V % 2 == 0) and (U % mod == mod - 1)) == (neg is not None),
                detail,
            )
        )
        out.append(
            CheckResult(
                "prime_power_parity",
                (not prime_power) or V % 2 == 1 or neg is not None,
                detail if prime_power else "not a prime power (vacuous)",
            )
        )
    amb = strong_ambiguity(e)
    out.append(
        CheckResult(
            "square_or_prime_power_not_ambiguous",
            (not (square or prime_power)) or not amb.holds,
            f"square = {square}, prime power = {prime_power}, ambiguous = {amb.holds}",
        )
    )
    return out
