import random

from slocc4 import tables
from slocc4.algebra import SL2Quad, StateVector, cartan, cartan_point, get_algebra
from slocc4.catalog import (
    DEFAULT_FAMILY_PARAMS, mixed_nilpotent_part, nilpotent_representative,
    semisimple_representative,
)
from slocc4.invariants import (
    RING16, check_infinitesimal_invariance, check_relations,
    check_symbolic_family_values, evaluate_signature, expected_family_values,
    load_invariants, vanishing_pattern,
)
from slocc4.poly import parse_poly
from slocc4.scalars import ZERO, gr

A = get_algebra()


def test_h_formula():
    # x1*x16 - x2*x15 - x3*x14 + x4*x13 - x5*x12 + x6*x11 + x7*x10 - x8*x9
    expect = parse_poly(
        RING16,
        "x1*x16 - x2*x15 - x3*x14 + x4*x13 - x5*x12 + x6*x11 + x7*x10 - x8*x9")
    assert load_invariants().H == expect


def test_term_counts_and_degrees():
    inv = load_invariants()
    assert [len(p) for p in inv.as_tuple()] == [8, 24, 24, 144]
    assert [p.total_degree() for p in inv.as_tuple()] == [2, 4, 4, 6]
    # homogeneity
    for p in inv.as_tuple():
        degs = {sum(m) for m in p.terms}
        assert len(degs) == 1
    # every L monomial involves four distinct variables
    for m in inv.L.terms:
        assert all(e <= 1 for e in m)
    # all coefficients are +-1
    for p in inv.as_tuple():
        assert all(c == gr(1) or c == gr(-1) for c in p.terms.values())


def test_m_row_repair_is_flagged():
    notes = load_invariants().notes
    assert len(notes) == 1
    assert "17.12.14" in notes[0] and "1.7.12.14" in notes[0]


def test_infinitesimal_invariance_all_48():
    rep = check_infinitesimal_invariance()
    assert len(rep) == 48
    assert all(ok for _, _, ok in rep)


def test_signature_examples():
    assert evaluate_signature(StateVector.zero()).is_zero()
    assert evaluate_signature(cartan(1)).as_tuple() == (gr(1), ZERO, ZERO, ZERO)
    # oracle: substitute lambda = (2,3,4,7) into the symbolic row-1 values
    lams = [gr(2), gr(3), gr(4), gr(7)]
    expect = tuple(p.evaluate(lams) for p in expected_family_values(1))
    got = evaluate_signature(cartan_point(lams)).as_tuple()
    assert got == expect
    assert got == (gr(78), gr(-315), gr(480), gr(38896))


def test_signature_ignores_nilpotent_part():
    x = cartan(1) + StateVector.basis("0011")
    assert evaluate_signature(x).as_tuple() == evaluate_signature(cartan(1)).as_tuple()


def test_symbolic_rows_and_relations():
    assert all(ok for _, ok in check_symbolic_family_values())
    assert all(ok for _, ok in check_relations())


def test_orbit_constancy_on_random_pairs():
    rng = random.Random(17)

    def rand_sl2():
        a = gr(rng.randrange(-2, 3), rng.randrange(-2, 3))
        b = gr(rng.randrange(-2, 3))
        u = gr(rng.choice([1, 2]), rng.choice([0, 1]))
        return ((u, a), (b * u, (gr(1) + a * b * u) / u))

    for _ in range(100):
        amps = [gr(rng.randrange(-2, 3), rng.randrange(-2, 3))
                if rng.random() < 0.5 else ZERO for _ in range(16)]
        x = StateVector(amps)
        g = SL2Quad((rand_sl2(), rand_sl2(), rand_sl2(), rand_sl2()))
        assert evaluate_signature(A.group_act(g, x)).as_tuple() == \
            evaluate_signature(x).as_tuple()


def test_nilpotent_cone_vanishing():
    for orbit, _, _, _ in tables.NILPOTENT_ORBITS:
        assert evaluate_signature(nilpotent_representative(orbit)).is_zero()
    for i, parts in tables.NIJ.items():
        for j in range(1, len(parts) + 1):
            assert evaluate_signature(mixed_nilpotent_part(i, j)).is_zero()


def test_semisimple_separation_within_and_across_families():
    seen = {}
    for fam in range(1, 11):
        sig = evaluate_signature(
            semisimple_representative(fam, DEFAULT_FAMILY_PARAMS[fam])).as_tuple()
        for other, sig2 in seen.items():
            assert sig != sig2, (fam, other)
        seen[fam] = sig
    # same family, different parameters
    a = evaluate_signature(semisimple_representative(10, (gr(1),))).as_tuple()
    b = evaluate_signature(semisimple_representative(10, (gr(2),))).as_tuple()
    assert a != b
    # Weyl images keep the signature
    from slocc4.weyl import get_weyl, _apply_gr
    W = get_weyl()
    p = (gr(2), gr(3), gr(4), gr(7))
    base = evaluate_signature(cartan_point(p)).as_tuple()
    for m in W.elements[:20]:
        q = _apply_gr(m, p)
        assert evaluate_signature(cartan_point(q)).as_tuple() == base


def test_vanishing_pattern_discriminators():
    pats = {}
    for fam in (4, 5, 6, 7, 8, 9):
        sig = evaluate_signature(
            semisimple_representative(fam, DEFAULT_FAMILY_PARAMS[fam]))
        pats[fam] = vanishing_pattern(sig)
    assert pats[4]["L=0"] and pats[4]["D=0"] and not pats[4]["M=0"]
    assert pats[5]["M=0"] and pats[5]["D=0"] and not pats[5]["L=0"]
    assert pats[6]["L=-M"] and not pats[6]["L=0"]
    assert pats[7]["H^2+4M=0"] and pats[7]["L=0"] and pats[7]["D=0"]
    assert pats[8]["H^2-4L=0"] and pats[8]["M=0"] and pats[8]["D=0"]
    assert pats[9]["L=-M"] and pats[9]["H^2-4M=0"]
