"""Exact-arithmetic analysis of Hilbert squares of degree-2e K3 surfaces of
Picard rank one: Pell-type equations, discriminant-form glueing, cone walls,
partner counting, strong ambiguity, and automorphism groups.

Everything is computed with integers and exact rationals; every headline
decision is double-checked by an independent orbit computation.
"""

from .arith import (
    Factorization,
    factorize,
    is_perfect_square,
    p_of_e,
    square_roots_of_unity,
    two_torsion_count,
)
from .disc import (
    DiscGroupSpec,
    InducedAction,
    IsotropicGenerator,
    check_isotropic,
    enumerate_I,
    enumerate_J,
    exceptional_group,
    fm_partner_count,
    glued_action,
    overlattice_check,
    polarization_group,
    q_of,
    transcendental_group,
)
from .errors import ConsistencyError
from .nslat import (
    Slopes,
    alpha,
    ample_wall_rays,
    beta,
    gram,
    induced_action,
    is_isometry,
    isometry_group_elements,
    movable_wall_rays,
    preserves_ample,
    preserves_movable,
    slopes,
    theta,
)
from .pell import (
    PellProblem,
    PellSolution,
    brute_force_minimal,
    fundamental_solution,
    generate_solutions,
    minimal_solution,
    negative_pell,
    square_d_minimal,
)
from .verdicts import (
    AmbiguityDecision,
    CheckResult,
    OrbitAnalysis,
    OrbitRecord,
    Verdict,
    analyze,
    aut_order,
    consistency_check,
    hodge_isometry_exists,
    orbit_analysis,
    strong_ambiguity,
)

__version__ = "0.1.0"
