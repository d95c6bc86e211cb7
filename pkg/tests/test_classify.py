from slocc4.algebra import SL2Quad, StateVector, cartan, cartan_point, get_algebra
from slocc4.catalog import (
    DEFAULT_FAMILY_PARAMS, OrbitClassLabel, representative,
    semisimple_representative,
)
from slocc4.classify import (
    canonical_parameters, classify_state, s_normal_form, semisimple_family,
    semisimple_parameters,
)
from slocc4.groebner import Limits
from slocc4.invariants import InvariantSignature, evaluate_signature
from slocc4.scalars import ZERO, gr

A = get_algebra()
LIM = Limits(max_degree=14, time_budget=60.0)


def test_classify_u1():
    r = classify_state(cartan(1), LIM)
    assert r.exactness == "exact"
    assert r.label.kind == "semisimple" and r.label.family == 10
    assert r.label.parameters == (gr(1),)
    assert r.s_class == ("S", "D1")
    assert r.stabilizer.identity_component_dim == 3


def test_classify_product_state():
    r = classify_state(StateVector.basis("0011"), LIM)
    assert r.label.kind == "nilpotent" and r.label.orbit == 1
    assert r.s_class == ("N2", "D2")
    assert r.exactness == "exact"


def test_classify_mixed_example():
    r = classify_state(cartan(1) + StateVector.basis("0011"), LIM)
    assert r.label.kind == "mixed"
    assert (r.label.family, r.label.j) == (10, 13)
    assert r.exactness == "exact"


def test_classify_generic():
    r = classify_state(cartan_point([gr(2), gr(3), gr(4), gr(7)]), LIM)
    assert r.label.kind == "semisimple" and r.label.family == 1
    assert r.exactness == "exact"
    # (2,3,4,7) and the canonical parameters are the same Weyl orbit
    assert r.label.parameters == canonical_parameters(
        1, (gr(2), gr(3), gr(4), gr(7)))
    assert r.label.parameters == (gr(1), gr(2), gr(3), gr(8))


def test_classify_zero():
    r = classify_state(StateVector.zero(), LIM)
    assert r.label.kind == "nilpotent" and r.label.orbit == 31
    assert r.exactness == "exact"


def test_family_discriminators_cover_all_ten():
    for fam in range(1, 11):
        s = semisimple_representative(fam, DEFAULT_FAMILY_PARAMS[fam])
        assert semisimple_family(s) == fam


def test_semisimple_parameters_family10():
    sols, note = semisimple_parameters(
        10, InvariantSignature(gr(4), ZERO, ZERO, ZERO))
    assert set(sols) == {(gr(2),), (gr(-2),)}
    sols, note = semisimple_parameters(
        10, InvariantSignature(gr(0, 1), ZERO, ZERO, ZERO))
    assert sols == [] and "square root" in note


def test_semisimple_parameters_family4():
    sig = InvariantSignature(gr(5), ZERO, gr(-4), ZERO)
    sols, _ = semisimple_parameters(4, sig)
    assert sols
    for sol in sols:
        assert {(sol[0] * sol[0]), (sol[1] * sol[1])} == {gr(1), gr(4)}
    canon = {canonical_parameters(4, s) for s in sols}
    assert len(canon) == 1


def test_semisimple_parameters_roundtrip_families():
    for fam in range(1, 11):
        params = DEFAULT_FAMILY_PARAMS[fam]
        sig = evaluate_signature(semisimple_representative(fam, params))
        sols, note = semisimple_parameters(fam, sig)
        assert sols, (fam, note)
        canon = {canonical_parameters(fam, s) for s in sols}
        assert canon == {canonical_parameters(fam, params)}, fam


def test_s_normal_form_examples():
    lab = OrbitClassLabel("semisimple", family=2, parameters=(gr(-1), gr(2), gr(3)))
    params, sclass, fam, _ = s_normal_form(lab)
    assert params == (gr(1), gr(2), gr(3))
    assert sclass == ("S", "D1")
    lab = OrbitClassLabel("semisimple", family=7, parameters=(gr(-5),))
    params, _, _, _ = s_normal_form(lab)
    assert params == (gr(5),)
    lab = OrbitClassLabel("mixed", family=4, j=3, parameters=(gr(1), gr(2)))
    _, sclass, fam, j = s_normal_form(lab)
    assert sclass == ("N2", "D2") and fam == 4 and j == 3
    # reduced families pass through their qubit swap
    lab = OrbitClassLabel("mixed", family=9, j=6, parameters=(gr(1),))
    _, sclass, fam, j = s_normal_form(lab)
    assert fam == 7 and sclass == ("N2", "D2") and j == 6


def test_permutation_coherence_of_s_class():
    from slocc4.algebra import ALL_PERMUTATIONS
    lab = OrbitClassLabel("mixed", family=4, j=1, parameters=(gr(1), gr(2)))
    rep = representative(lab)
    want = ("N3", "D3")
    for sigma in ALL_PERMUTATIONS[:8]:
        r = classify_state(A.sym4_act(sigma, rep), LIM)
        assert r.exactness == "exact"
        assert r.s_class == want, sigma


def test_classification_constant_on_orbit():
    g = SL2Quad((((1, 1), (0, 1)), ((1, 0), (2, 1)),
                 ((0, 1), (-1, 0)), ((gr(3), 0), (0, gr(1) / gr(3)))))
    lab = OrbitClassLabel("mixed", family=3, j=2,
                          parameters=canonical_parameters(3, DEFAULT_FAMILY_PARAMS[3]))
    rep = representative(lab)
    r = classify_state(A.group_act(g, rep), LIM)
    assert r.exactness == "exact"
    assert r.label.key() == lab.key()
    assert r.label.parameters == lab.parameters


def test_irrational_parameters_report_partial():
    # e0000 + i*e1111 is semisimple with invariants (i, 0, 0, 0); the family-10
    # parameter satisfies l1^2 = i, which has no square root in Q(i)
    x = StateVector.basis("0000") + StateVector.basis("1111").scale(gr(0, 1))
    r = classify_state(x, LIM)
    assert r.exactness == "partial"
    assert evaluate_signature(x).as_tuple() == (gr(0, 1), ZERO, ZERO, ZERO)
    assert any("square root" in n or "outside Q(i)" in n for n in r.notes)
