from fractions import Fraction

import pytest

from k3hilb.disc import polarization_group, exceptional_group, q_of
from k3hilb.nslat import (
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
from k3hilb.nslat import _matvec, _mul, _ray
from k3hilb.pell import PellProblem, is_square, minimal_solution, square_d_minimal

ID = ((1, 0), (0, 1))
NEG = ((-1, 0), (0, -1))


def nonsquares(limit):
    return [e for e in range(2, limit + 1) if not is_square(e)]


def solvable_45(e):
    if is_square(e):
        return square_d_minimal(4 * e, 5) is not None
    return minimal_solution(PellProblem(4 * e, 5)) is not None


def test_gram():
    assert gram(1) == ((2, 0), (0, -2))
    assert gram(6) == ((12, 0), (0, -2))
    assert gram(10) == ((20, 0), (0, -2))
    with pytest.raises(ValueError):
        gram(0)


def test_is_isometry():
    assert is_isometry(6, ID)
    assert is_isometry(6, ((5, 2), (12, 5)))
    assert not is_isometry(6, ((1, 1), (0, 1)))


def test_theta_values():
    assert theta(6) == ((5, 2), (12, 5))
    assert theta(15) == ((4, 1), (15, 4))
    assert theta(2) == ((3, 2), (4, 3))
    for e in (1, 4, 9):
        with pytest.raises(ValueError, match="theta undefined"):
            theta(e)


def test_alpha_and_beta():
    assert _mul(alpha(), alpha()) == ID
    assert beta(6) == ((5, 2), (-12, -5))
    assert _mul(beta(6), beta(6)) == ID


def test_generated_isometries_satisfy_gram_identity():
    for e in nonsquares(300):
        for m in isometry_group_elements(e, k_max=6):
            assert is_isometry(e, m), (e, m)
        assert _mul(beta(e), beta(e)) == ID


def test_induced_action_examples():
    th6 = induced_action(6, theta(6))
    assert th6.mbar == ((5, 0), (0, 1))  # multiplies a by 5 on the z = 0 set
    th10 = induced_action(10, theta(10))
    assert th10.mbar == ((19, 0), (0, 1))  # a -> -a mod 20
    assert induced_action(6, ID).is_identity()
    with pytest.raises(ValueError):
        induced_action(6, ((1, 1), (0, 1)))


def test_induced_theta_is_involution():
    for e in nonsquares(300):
        th = induced_action(e, theta(e))
        assert th.compose(th).is_identity(), e


def test_induced_action_respects_discriminant_form():
    # q on (Z/2e) x (Z/2): q(a, z) = a^2/2e - z^2/2 mod 2
    for e in nonsquares(300) + [1, 4, 9, 16, 25]:
        pol, exc = polarization_group(e), exceptional_group()
        mats = [alpha(), NEG] + ([] if is_square(e) else [theta(e), beta(e)])
        for m in mats:
            act = induced_action(e, m)
            (m00, m01), (m10, m11) = act.mbar
            for a in range(2 * e):
                for z in (0, 1):
                    qa = (q_of(a, pol) + q_of(z, exc)) % 2
                    a2 = (m00 * a + m01 * z) % (2 * e)
                    z2 = (m10 * a + m11 * z) % 2
                    qb = (q_of(a2, pol) + q_of(z2, exc)) % 2
                    assert qa == qb, (e, m, a, z)


def test_slopes_examples():
    assert slopes(1) == Slopes(nu=Fraction(2, 3), mu=Fraction(1))
    assert (slopes(6).nu, slopes(6).mu) == (Fraction(12, 5), Fraction(12, 5))
    assert (slopes(5).nu, slopes(5).mu) == (Fraction(2), Fraction(20, 9))
    assert (slopes(4).nu, slopes(4).mu) == (Fraction(2), Fraction(2))


def test_slope_order_matches_wall_split():
    for e in range(1, 501):
        s = slopes(e)
        assert 0 < s.nu <= s.mu
        assert (s.nu == s.mu) == (not solvable_45(e)), e


def test_wall_rays():
    assert movable_wall_rays(6) == ((1, 0), (5, -12))
    assert ample_wall_rays(5) == ((1, 0), (1, -2))


def test_preserves_examples():
    assert preserves_movable(6, beta(6))
    assert preserves_ample(6, beta(6))
    assert preserves_movable(5, beta(5))
    assert not preserves_ample(5, beta(5))
    assert not preserves_movable(6, NEG)
    assert not preserves_ample(6, NEG)
    assert not preserves_movable(6, theta(6))
    with pytest.raises(ValueError):
        preserves_movable(6, ((1, 1), (0, 1)))


def test_movable_preserving_elements_are_exactly_id_and_beta():
    for e in nonsquares(300):
        keep = [m for m in isometry_group_elements(e, k_max=6) if preserves_movable(e, m)]
        assert sorted(keep) == sorted([ID, beta(e)]), e
    for e in (1, 4, 9, 16):
        keep = [m for m in isometry_group_elements(e) if preserves_movable(e, m)]
        assert keep == [ID], e


def test_beta_swaps_the_movable_walls():
    for e in nonsquares(300):
        w_h, w_mu = movable_wall_rays(e)
        b = beta(e)
        assert _ray(_matvec(b, w_h)) == w_mu, e
        assert _ray(_matvec(b, w_mu)) == w_h, e
