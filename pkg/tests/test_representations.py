import json

import numpy as np
import pytest

from exel_sgpd import (AxiomViolation, InvalidInput, PartialRep, check_covariant, check_partial_rep,
                       check_sg_rep, enumerate_sg, epsilon, rep_cstar_to_g, rep_g_to_sg,
                       rep_sg_to_cstar, rep_sg_to_g, regular_partial_rep, star, triangle_report)
from exel_sgpd.actions import GroupoidPartialAction, all_partial_actions
from exel_sgpd.cstar import ProjectionAlgebra, proj_multiply
from exel_sgpd.representations import (CovariantRep, close, covariant_from_sg_rep,
                                       is_partial_isometry, is_projection, load_rep, q_element)

from conftest import g1_example, g1_three_points, z2_example


def test_regular_z2_model():
    p = regular_partial_rep(z2_example())
    assert np.array_equal(p["a"], np.diag([1, 0]))
    assert np.array_equal(p["e"], np.eye(2))
    assert check_partial_rep(p).ok


def test_zero_assignment_passes(g1):
    p = PartialRep(g1, 2, {g: np.zeros((2, 2)) for g in g1})
    assert check_partial_rep(p).ok


def test_identity_groupoid_model(trivial):
    a = GroupoidPartialAction(trivial, [1, 2], {"e": [1]}, {"e": {1: 1}})
    p = regular_partial_rep(a)
    assert np.array_equal(p["e"], np.diag([1, 0]))


def test_global_action_gives_unitaries(z3):
    a = GroupoidPartialAction(z3, [0, 1, 2], {g: [0, 1, 2] for g in z3},
                              {"e": {0: 0, 1: 1, 2: 2}, "a": {0: 1, 1: 2, 2: 0},
                               "a2": {0: 2, 1: 0, 2: 1}})
    p = regular_partial_rep(a)
    for g in z3:
        assert close(p[g] @ p[g].conj().T, np.eye(3))


def test_checker_finds_violations(z2):
    p = PartialRep(z2, 1, {"e": [[1]], "a": [[1j]]})
    failed = check_partial_rep(p).failed_axioms()
    assert "PR2" in failed
    q = PartialRep(z2, 1, {"e": [[2]], "a": [[0]]})
    assert "PR3" in check_partial_rep(q).failed_axioms()
    with pytest.raises(InvalidInput):
        rep_g_to_sg(p)


def test_bad_action_rejected(z2):
    bad = GroupoidPartialAction(z2, [1, 2], {"e": [1], "a": [2]}, {"e": {1: 1}, "a": {2: 2}})
    with pytest.raises(InvalidInput):
        regular_partial_rep(bad)


@pytest.mark.parametrize("make", [z2_example, g1_example, g1_three_points])
def test_g_to_sg_and_back(make):
    p = regular_partial_rep(make())
    r = rep_g_to_sg(p)
    assert check_sg_rep(r).ok
    assert rep_sg_to_g(r).equals(p)
    G = p.groupoid
    for t in G:
        assert is_projection(r[epsilon(G, t)])
    for s in r.elements:
        assert close(r[star(s)], r[s].conj().T)


def test_cstar_rep_of_z2_model(z2):
    r = rep_g_to_sg(regular_partial_rep(z2_example()))
    phi = rep_sg_to_cstar(r)
    from exel_sgpd.representations import check_cstar_rep
    rep = check_cstar_rep(phi)
    assert rep.ok and rep.checked["multiplicative"] == 9


def test_q_projections(g1):
    r = rep_g_to_sg(regular_partial_rep(g1_three_points()))
    c = covariant_from_sg_rep(r)
    A = c.ctx.algebra
    assert close(c.rho[frozenset()], np.eye(3))
    for E in A.basis:
        for F in A.basis:
            prod = proj_multiply(A.P(*E), A.P(*F))
            assert close(c.rho[E] @ c.rho[F], c.rho_of(prod))


def test_q_element_uses_epsilons(g1):
    assert q_element(g1, {"g", "f"}) == epsilon(g1, "g")


@pytest.mark.parametrize("make", [z2_example, g1_example, g1_three_points])
def test_covariant_pair_axioms(make):
    r = rep_g_to_sg(regular_partial_rep(make()))
    rep = check_covariant(covariant_from_sg_rep(r))
    assert rep.ok
    assert rep.checked["absorb-right"] > 0 and rep.checked["CR1"] > 0


def test_non_partial_isometry_detected():
    r = rep_g_to_sg(regular_partial_rep(z2_example()))
    c = covariant_from_sg_rep(r)
    u = dict(c.u, a=2 * c.u["a"])
    bad = CovariantRep(c.ctx, c.dim, c.rho, u)
    assert not is_partial_isometry(bad.u["a"])
    assert "partial-isometry" in check_covariant(bad).failed_axioms()


@pytest.mark.parametrize("make", [z2_example, g1_example, g1_three_points])
def test_triangle(make):
    rep = triangle_report(regular_partial_rep(make()))
    assert rep.ok, rep.summary()


def test_cstar_to_g_gives_projections_on_units(g1):
    p = rep_cstar_to_g(rep_sg_to_cstar(rep_g_to_sg(regular_partial_rep(g1_example()))))
    for e in g1.units:
        assert is_projection(p[e])


@pytest.mark.parametrize("name", ["z2", "z3"])
def test_triangle_on_every_one_object_model(name, request):
    G = request.getfixturevalue(name)
    for a in all_partial_actions(G, [1, 2]):
        assert triangle_report(regular_partial_rep(a)).ok


def test_unit_projections_must_be_orthogonal(g1):
    # A legitimate partial representation whose unit projections overlap:
    # P_{e} P_{f} = 0 in C_p*(G) but pi(e) pi(f) != 0, so rho x u is not multiplicative.
    p = PartialRep(g1, 1, {g: [[1]] for g in g1})
    r = rep_g_to_sg(p)
    assert check_partial_rep(p).ok and check_sg_rep(r).ok
    with pytest.raises(AxiomViolation) as info:
        rep_sg_to_cstar(r)
    assert "multiplicative" in info.value.report.failed_axioms()


def test_g1_models_split_by_overlap_of_unit_domains(g1):
    for a in all_partial_actions(g1, [1, 2]):
        p = regular_partial_rep(a)
        if a.D["e"] & a.D["f"]:
            with pytest.raises(AxiomViolation):
                rep_sg_to_cstar(rep_g_to_sg(p))
        else:
            assert triangle_report(p).ok


def test_rep_spec_round_trip(tmp_path, g1):
    p = regular_partial_rep(g1_example())
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(p.to_spec()))
    assert load_rep(g1, path).equals(p)


def test_rep_spec_errors(g1):
    from exel_sgpd import MalformedSpec
    from exel_sgpd.representations import rep_from_spec
    with pytest.raises(MalformedSpec):
        rep_from_spec(g1, {"dim": 1, "pi": {"g": [[[1, 0]]]}})
    with pytest.raises(MalformedSpec):
        rep_from_spec(g1, {"dim": 2, "pi": {g: [[[1, 0]]] for g in ["g", "g^-1", "e", "f"]}})
