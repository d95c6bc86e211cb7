import random

from slocc4.algebra import SL2Quad, StateVector, cartan, get_algebra
from slocc4.catalog import (
    DEFAULT_FAMILY_PARAMS, sclass_nilpotent_rep, mixed_nilpotent_part,
    nilpotent_representative, semisimple_representative,
)
from slocc4.conjugacy import (
    conjugating_system, direct_system_answer, find_witness, g0_conjugate,
    local_rank_profile, prefilter_signature, s_conjugate,
)
from slocc4.groebner import Ideal, Limits, contains_one
from slocc4.scalars import ZERO, gr

A = get_algebra()
LIM = Limits(max_degree=14, time_budget=60.0)


def test_identity_pair():
    x = cartan(1) + StateVector.basis("0110")
    v = g0_conjugate(x, x, LIM)
    assert v.answer == "yes"
    assert v.witness == SL2Quad.identity()


def test_semisimple_invariant_criterion():
    v = g0_conjugate(cartan(1), cartan(3), LIM)
    assert v.answer == "yes" and v.route == "invariant_criterion"


def test_distinct_nilpotent_orbits():
    a = StateVector.basis("1100")
    b = StateVector.basis("1100") + StateVector.basis("0000")
    v = g0_conjugate(a, b, LIM)
    assert v.answer == "no"
    # the underlying polynomial system is unsolvable: the ideal contains 1
    assert contains_one(Ideal(conjugating_system(a, b)), LIM) == "yes"


def test_scaling_changes_semisimple_class():
    v = g0_conjugate(cartan(1), cartan(1).scale(gr(2)), LIM)
    assert v.answer == "no" and v.route == "invariant_criterion"


def test_conjugating_system_shape():
    a = cartan(1)
    system = conjugating_system(a, cartan(3))
    assert len(system) == 20
    degs = sorted(p.total_degree() for p in system)
    assert degs[-4:] == [4, 4, 4, 4] or max(degs) == 4
    # four determinant equations of degree 2
    assert sum(1 for p in system if p.total_degree() == 2) == 4


def test_prefilter_signature_examples():
    nilp, dims, ranks, sig = prefilter_signature(cartan(1))
    assert not nilp and dims == (10, 3, 7, 9) and sig == (gr(1), ZERO, ZERO, ZERO)
    nilp, dims, ranks, sig = prefilter_signature(StateVector.zero())
    assert nilp and dims == (28, 12, 16, 28) and ranks == (0,)
    nilp, _, _, sig = prefilter_signature(StateVector.basis("1100"))
    assert nilp and sig == (ZERO, ZERO, ZERO, ZERO)


def test_local_rank_profile_separates_permuted_orbits():
    profiles = {o: local_rank_profile(nilpotent_representative(o))
                for o in (2, 3, 4)}
    assert len(set(profiles.values())) == 3


def test_soundness_on_random_conjugates():
    rng = random.Random(23)

    def rand_sl2():
        a = gr(rng.randrange(-2, 3), rng.randrange(-2, 3))
        b = gr(rng.randrange(-2, 3))
        u = gr(rng.choice([1, 2]))
        return ((u, a), (b * u, (gr(1) + a * b * u) / u))

    samples = [
        cartan(1),
        StateVector.basis("1100"),
        nilpotent_representative(9),
        semisimple_representative(4, DEFAULT_FAMILY_PARAMS[4]),
        semisimple_representative(4, DEFAULT_FAMILY_PARAMS[4])
        + mixed_nilpotent_part(4, 3),
        semisimple_representative(10, DEFAULT_FAMILY_PARAMS[10])
        + mixed_nilpotent_part(10, 5),
    ]
    for x in samples:
        g = SL2Quad((rand_sl2(), rand_sl2(), rand_sl2(), rand_sl2()))
        y = A.group_act(g, x)
        va = g0_conjugate(x, y, LIM)
        vb = g0_conjugate(y, x, LIM)
        assert va.answer == "yes", str(x)
        assert vb.answer == va.answer  # symmetry


def test_soundness_fifty_random_catalog_pairs():
    # the module-level soundness property: x ~ g.x for catalog representatives
    rng = random.Random(71)

    def rand_sl2():
        a = gr(rng.randrange(-1, 2), rng.randrange(-1, 2))
        b = gr(rng.randrange(-1, 2))
        u = gr(rng.choice([1, 1, 2]))
        return ((u, a), (b * u, (gr(1) + a * b * u) / u))

    from slocc4.catalog import all_g0_labels, representative
    from slocc4.classify import canonical_parameters
    canon = {f: canonical_parameters(f, p)
             for f, p in DEFAULT_FAMILY_PARAMS.items()}
    labels = all_g0_labels(canon)
    rng.shuffle(labels)
    for lab in labels[:50]:
        x = representative(lab)
        g = SL2Quad((rand_sl2(), rand_sl2(), rand_sl2(), rand_sl2()))
        v = g0_conjugate(x, A.group_act(g, x), LIM)
        assert v.answer == "yes", str(lab)


def test_separation_within_family():
    x = semisimple_representative(10, (gr(1),)) + mixed_nilpotent_part(10, 5)
    y = semisimple_representative(10, (gr(1),)) + mixed_nilpotent_part(10, 13)
    v = g0_conjugate(x, y, LIM)
    assert v.answer == "no"


def test_s_conjugate_product_states():
    v = s_conjugate(StateVector.basis("0011"), StateVector.basis("1100"),
                    LIM, want_witness=True)
    assert v.answer == "yes"
    assert v.permutation is not None
    assert v.witness is not None
    assert A.group_act(v.witness,
                       A.sym4_act(v.permutation, StateVector.basis("0011"))) \
        == StateVector.basis("1100")


def test_s_conjugate_nilpotent_to_table_target():
    v = s_conjugate(mixed_nilpotent_part(10, 1), sclass_nilpotent_rep("N6"), LIM)
    assert v.answer == "yes"


def test_s_conjugate_scaled_cartan_is_not():
    v = s_conjugate(cartan(1), cartan(1).scale(gr(2)), LIM)
    assert v.answer == "no"


def test_witness_direct_construction():
    a = StateVector.basis("0110").scale(gr(2))
    b = StateVector.basis("1010").scale(gr(0, 3))
    w = find_witness(a, b, LIM)
    assert w is not None
    assert A.group_act(w, a) == b


def test_direct_system_answers():
    # same orbit: proper ideal
    a = StateVector.basis("0011")
    b = StateVector.basis("1100")
    assert direct_system_answer(a, b, LIM) == "yes"
    # distinct orbits: trivial ideal
    c = StateVector.basis("1100") + StateVector.basis("0000")
    assert direct_system_answer(b, c, LIM) == "no"
