import pytest

from k3hilb.arith import factorize
from k3hilb.pell import PellProblem, fundamental_solution, is_square, minimal_solution, negative_pell
from k3hilb.verdicts import (
    analyze,
    aut_order,
    consistency_check,
    hodge_isometry_exists,
    orbit_analysis,
    strong_ambiguity,
)


def is_prime_power(e):
    return len(factorize(e).factors) == 1


def criterion_ambiguous(e):
    # the closed-form criterion, written out independently of strong_ambiguity
    if is_square(e):
        return False
    u, v = fundamental_solution(e)
    if v % 2 != 0 or u % (2 * e) == 2 * e - 1:
        return False
    return minimal_solution(PellProblem(4 * e, 5)) is None


def criterion_aut_two(e):
    if is_square(e):
        return False
    if negative_pell(e) is None:
        return False
    return minimal_solution(PellProblem(4 * e, 5)) is None


def test_hodge_isometry_examples():
    assert hodge_isometry_exists(6)
    assert not hodge_isometry_exists(10)
    assert not hodge_isometry_exists(15)
    assert not hodge_isometry_exists(4)


def test_strong_ambiguity_examples():
    assert strong_ambiguity(6).holds
    assert not strong_ambiguity(10).holds
    assert not strong_ambiguity(4).holds
    assert not strong_ambiguity(15).holds


def test_strong_ambiguity_evidence():
    dec = strong_ambiguity(6)
    assert dec.pell1 == (5, 2)
    assert dec.pell45 is None
    assert dec.witness == (1, 5)
    dec10 = strong_ambiguity(10)
    assert dec10.witness is None and dec10.pell1 == (19, 6)


def test_aut_order_examples():
    assert aut_order(1) == 1
    assert aut_order(2) == 2
    assert aut_order(10) == 2
    assert aut_order(5) == 1


def test_orbit_analysis_examples():
    oa6 = orbit_analysis(6)
    assert oa6.hodge_classes == 1
    assert oa6.effective_orbits == ((1, 5, 7, 11),)
    oa10 = orbit_analysis(10)
    assert oa10.hodge_classes == 2
    assert oa10.effective_orbits == ((1, 19), (9, 11))
    oa1 = orbit_analysis(1)
    assert oa1.hodge_classes == 1 and oa1.effective_orbits == ((1,),)


def test_orbit_analysis_e15_escapes_to_z1():
    oa = orbit_analysis(15)
    arrows = dict(oa.arrows["theta_bar"])
    assert arrows[(1, 0)] == (4, 1)
    assert oa.hodge_classes == 2


def test_analyze_examples():
    v6 = analyze(6)
    assert (v6.fm_count, v6.strongly_ambiguous, v6.hodge_classes, v6.aut_order) == (2, True, 1, 1)
    v10 = analyze(10)
    assert (v10.fm_count, v10.strongly_ambiguous, v10.hodge_classes, v10.aut_order) == (2, False, 2, 2)
    v1 = analyze(1)
    assert (v1.fm_count, v1.strongly_ambiguous, v1.aut_order) == (1, False, 1)
    assert v1.pell1 is None and v1.pell_neg is None
    assert v1.pell45 == (3, 1)


def test_analyze_orbit_table():
    v6 = analyze(6)
    assert [(rec.members, rec.effective) for rec in v6.orbit_table] == [((1, 5, 7, 11), True)]
    v15 = analyze(15)
    assert all(rec.effective for rec in v15.orbit_table)
    assert [rec.members for rec in v15.orbit_table] == [(1, 29), (11, 19)]


def test_analyze_rejects_bad_e():
    with pytest.raises(ValueError):
        analyze(0)


def test_theorem_equivalence_window():
    # closed-form criteria vs orbit computations; analyze re-checks internally
    for e in range(1, 151):
        v = analyze(e)
        assert v.strongly_ambiguous == criterion_ambiguous(e), e
        assert (v.aut_order == 2) == criterion_aut_two(e), e
        assert v.strongly_ambiguous == (v.hodge_classes < v.fm_count), e


def test_ambiguity_needs_composite_nonsquare():
    for e in range(1, 301):
        if strong_ambiguity(e).holds:
            assert not is_square(e) and not is_prime_power(e), e


def test_aut_two_needs_equal_slopes():
    from k3hilb.nslat import slopes

    for e in range(1, 301):
        if aut_order(e) == 2:
            s = slopes(e)
            assert s.nu == s.mu, e


def test_consistency_check_examples():
    r2 = {c.name: c for c in consistency_check(2)}
    assert r2["neg_pell_iff_u_minus_1"].passed
    assert "(U, V) = (3, 2)" in r2["neg_pell_iff_u_minus_1"].detail
    r8 = {c.name: c for c in consistency_check(8)}
    assert r8["prime_power_parity"].passed
    r6 = {c.name: c for c in consistency_check(6)}
    assert r6["v_even_u_not_1"].passed


def test_consistency_check_square_skips_pell_items():
    results = consistency_check(4)
    by_name = {c.name: c for c in results}
    assert by_name["v_even_u_not_1"].passed is None
    assert by_name["square_or_prime_power_not_ambiguous"].passed
    with pytest.raises(ValueError):
        consistency_check(1)


def test_consistency_checks_hold_in_window():
    for e in range(2, 301):
        for check in consistency_check(e):
            assert check.passed is not False, (e, check)


def test_stabilizer_matches_aut():
    for e in (2, 10, 13, 1, 4, 6, 15):
        oa = orbit_analysis(e)
        assert oa.aut_nontrivial == (aut_order(e) == 2), e
