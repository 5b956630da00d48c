"""Orderability verdicts, the self-distributive dichotomy, and reports."""

import pytest

from ybe import (
    analyze,
    biorderability,
    involutive_orderability,
    sd_dichotomy,
    sd_solutions,
    verify_rack,
    verify_solution,
)
from ybe.core import classify
from ybe.errors import NotInvolutive
from ybe.fixtures import fixture_rack, fixture_solution
from ybe.fpgroups import finite_quotient


def test_trivial_flip_is_biorderable():
    ident = [[0, 1, 2]] * 3
    verdict = biorderability(verify_solution(ident, ident))
    assert verdict.bi_orderable
    kind, rank, orbit_of = verdict.certificate
    assert kind == "free_abelian" and rank == 3
    assert orbit_of == (0, 1, 2)


def test_free_abelian_certificate_verifies(solution_fixtures):
    # every relator must map to zero under the orbit indicator map
    for s in solution_fixtures.values():
        verdict = biorderability(s)
        if not verdict.bi_orderable:
            continue
        _, rank, orbit_of = verdict.certificate
        for x in range(s.n):
            for y in range(s.n):
                u, v = s.r(x, y)
                image = [0] * rank
                image[orbit_of[x]] += 1
                image[orbit_of[y]] += 1
                image[orbit_of[u]] -= 1
                image[orbit_of[v]] -= 1
                assert all(c == 0 for c in image)


def test_dihedral_sd_solution_has_quotient_torsion():
    verdict = biorderability(fixture_solution("solution/dihedral3-sd"))
    assert not verdict.bi_orderable
    kind, x, y, order = verdict.certificate
    assert kind == "quotient_torsion"
    assert (x, y, order) == (0, 1, 3)
    # the witness really has that order in the finite quotient
    fg, iota = finite_quotient(fixture_solution("solution/dihedral3-sd"))
    g = fg.mult[fg.inv(iota[x])][iota[y]]
    assert fg.element_order(g) == 3


def test_abelianization_torsion_witness():
    verdict = biorderability(fixture_solution("solution/dihedral3-c"))
    assert verdict.certificate == ("ab_torsion", (3,))
    verdict = biorderability(fixture_solution("solution/twisted-flip2"))
    assert not verdict.bi_orderable
    assert verdict.certificate[0] == "ab_torsion"


def test_involutive_nontrivial_flip_not_biorderable():
    verdict = biorderability(fixture_solution("solution/invol3-c"))
    assert not verdict.bi_orderable
    assert verdict.certificate[0] == "rank_mismatch"


def test_sd_dichotomy_on_three_point_quandles():
    assert sd_dichotomy(fixture_rack("rack/trivial3")).verdict == "FREE_ABELIAN"
    assert sd_dichotomy(fixture_rack("rack/two-orbit3")).verdict == "FREE_ABELIAN"
    d = sd_dichotomy(fixture_rack("rack/dihedral3"))
    assert d.verdict == "TORSION_NONABELIAN"
    assert d.witness is not None


def test_sd_dichotomy_on_torsion_quandle_with_injectivity():
    from ybe.fpgroups import is_injective

    rk = fixture_rack("rack/4pt-torsion")
    assert sd_dichotomy(rk).verdict == "TORSION_NONABELIAN"
    # the torsion case can still have an injective generator map
    assert is_injective(sd_solutions(rk)[0])[0]


def test_sd_dichotomy_free_abelian_case():
    rk = fixture_rack("rack/3pt-free-image")
    assert sd_dichotomy(rk).verdict == "FREE_ABELIAN"
    sol = sd_solutions(rk)[0]
    verdict = biorderability(sol)
    assert verdict.bi_orderable
    assert verdict.certificate[1] == 2  # free abelian of rank two


def test_sd_dichotomy_agrees_with_biorderability(rack_fixtures):
    for rk in rack_fixtures.values():
        if rk.n > 4:
            continue
        verdict = sd_dichotomy(rk)
        bi = biorderability(sd_solutions(rk)[0])
        assert (verdict.verdict == "FREE_ABELIAN") == bi.bi_orderable


def test_involutive_orderability():
    trivial = verify_solution([[0, 1]] * 2, [[0, 1]] * 2)
    v = involutive_orderability(trivial)
    assert v.bi_orderable and v.left_orderable and v.diffuse
    assert v.mp_level == 1

    v = involutive_orderability(fixture_solution("solution/twisted-flip2"))
    assert not v.bi_orderable and v.left_orderable and v.diffuse
    assert v.mp_level == 1

    v = involutive_orderability(fixture_solution("solution/4pt-irretractable"))
    assert not v.left_orderable and not v.diffuse
    assert v.mp_level is None

    with pytest.raises(NotInvolutive):
        involutive_orderability(fixture_solution("solution/dihedral3-sd"))


def test_involutive_biorderable_only_for_trivial_flip(involutive3):
    ident = (0, 1, 2)
    for s in involutive3.representatives:
        trivial = all(s.sigma[x] == ident and s.tau[x] == ident for x in range(3))
        assert involutive_orderability(s).bi_orderable == trivial
        assert biorderability(s).bi_orderable == trivial


def test_analyze_report_fields():
    report = analyze(fixture_solution("solution/dihedral3-sd"))
    assert report.n == 3
    assert not report.involutive and report.biquandle
    assert report.self_distributive_right
    assert report.k_r == 1 and report.K_r == 1
    assert report.degrees_d == (2, 2, 2)
    assert report.ab_free_rank == 1 and report.ab_torsion == ()
    assert report.quotient_order == 6
    assert report.injective and report.iis_size == 3
    assert report.mp_level is None
    assert report.bi_orderable == "no"
    assert report.left_orderable == "no" and report.diffuse == "no"
    assert report.notes


def test_analyze_involutive_branch():
    report = analyze(fixture_solution("solution/invol3-d"))
    assert report.involutive
    assert report.mp_level == 2
    assert report.bi_orderable == "no"
    assert report.left_orderable == "yes" and report.diffuse == "yes"


def test_analyze_unknown_branch():
    report = analyze(fixture_solution("solution/dihedral3-b"))
    assert not report.involutive
    assert not report.self_distributive_right
    assert report.left_orderable == "unknown" and report.diffuse == "unknown"
    assert report.bi_orderable == "no"


def test_analyze_biorderable_branch():
    sol = sd_solutions(fixture_rack("rack/3pt-free-image"))[0]
    report = analyze(sol)
    assert report.bi_orderable == "yes"
    assert report.left_orderable == "yes" and report.diffuse == "yes"
    assert report.ab_free_rank == 2 and report.ab_torsion == ()


def test_analyze_is_deterministic():
    a = analyze(fixture_solution("solution/dihedral3-c"))
    b = analyze(fixture_solution("solution/dihedral3-c"))
    assert a == b
    assert a.to_dict()["quotient_order"] == 6


def test_analyze_one_point_solution():
    report = analyze(verify_solution([[0]], [[0]]))
    assert report.mp_level == 0
    assert report.quotient_order == 2
    assert report.bi_orderable == "yes"


def test_analyze_rank_always_matches_orbits(solution_fixtures):
    for name, s in solution_fixtures.items():
        if s.n > 4:
            continue
        report = analyze(s)
        assert report.ab_free_rank == report.k_r, name


def test_structure_rack_orbits_refine_solution_orbits(solution_fixtures):
    # every structure-rack orbit is contained in a solution orbit, so K >= k
    from ybe.core import rack_orbits, solution_orbits
    from ybe.derived import structure_racks

    for s in solution_fixtures.values():
        sol_orbits = solution_orbits(s)
        block_of = {}
        for i, block in enumerate(sol_orbits):
            for x in block:
                block_of[x] = i
        for rack_block in rack_orbits(structure_racks(s).right):
            assert len({block_of[x] for x in rack_block}) == 1
        assert len(rack_orbits(structure_racks(s).right)) >= len(sol_orbits)
