"""The acceptance gate: one test per criterion, exact tolerances throughout.

Each test prints a single [PASS]/[FAIL] line (run pytest with -s to see them
live; they also appear in captured output on failure).  Criterion 10 is the
only one permitted a partial outcome, and reports it instead of failing.
"""

import itertools
import random
import time

from slocc4 import tables
from slocc4.algebra import ALL_PERMUTATIONS, StateVector, cartan, get_algebra
from slocc4.catalog import (
    DEFAULT_FAMILY_PARAMS, all_g0_labels, census, sclass_nilpotent_rep,
    mixed_nilpotent_part, mixed_sclass, nilpotent_representative,
    representative, semisimple_representative, stabilizer_selfcheck,
)
from slocc4.classify import canonical_parameters, classify_state
from slocc4.conjugacy import (
    direct_system_answer, prefilter_signature, s_conjugate,
)
from slocc4.groebner import Limits
from slocc4.invariants import (
    check_infinitesimal_invariance, check_relations,
    check_symbolic_family_values, evaluate_signature,
)
from slocc4.jordan import centralizer, is_nilpotent, jordan_decompose
from slocc4.scalars import ZERO, gr
from slocc4.weyl import get_weyl


def _report(num, name, passed, detail=""):
    mark = "PASS" if passed else "FAIL"
    extra = f" - {detail}" if detail else ""
    print(f"[{mark}] criterion {num}: {name}{extra}")
    assert passed, f"criterion {num}: {name}{extra}"


def test_criterion_01_algebra_construction():
    t0 = time.monotonic()
    A = get_algebra()
    ok_dim = len(A.basis_element(0).coords()) == 28
    ok_jacobi = A.verify_jacobi_all() == 3276
    ok_cartan = all(A.bracket_odd_odd(cartan(i), cartan(j)).is_zero()
                    for i in range(1, 5) for j in range(1, 5))
    A.verify_theta_automorphism()
    for sigma in ALL_PERMUTATIONS:
        A.verify_sym4_automorphism(sigma)
    elapsed = time.monotonic() - t0
    _report(1, "algebra construction",
            ok_dim and ok_jacobi and ok_cartan and elapsed < 10.0,
            f"dim 28, 3276 Jacobi triples, theta + 24 permutation "
            f"automorphisms in {elapsed:.1f}s (< 10s)")


def test_criterion_02_weyl_census():
    t0 = time.monotonic()
    W = get_weyl()
    ok_order = len(W.elements) == 192
    types = sorted(c.type_name for c in W.classes.values())
    ok_types = types == sorted(["empty", "A1", "A2", "2A1", "2A1", "2A1",
                                "A3", "A3", "A3", "3A1", "D4"])
    ok_complete = (all(c.complete for c in W.classes.values())
                   and len(W.noncomplete_classes) == 1
                   and W.noncomplete_classes[0].type_name == "4A1")
    gammas = tuple(W.gamma_group(l).order for l in range(1, 12))
    ok_gamma = gammas == (192, 8, 2, 8, 8, 8, 2, 2, 2, 2, 1)
    elapsed = time.monotonic() - t0
    _report(2, "Weyl census",
            ok_order and ok_types and ok_complete and ok_gamma
            and elapsed < 60.0,
            f"|W|=192, 11 complete classes + 4A1, Gamma orders {gammas} "
            f"in {elapsed:.1f}s (< 60s)")


def test_criterion_03_invariant_identities():
    t0 = time.monotonic()
    inv48 = check_infinitesimal_invariance()
    rows = check_symbolic_family_values()
    rels = check_relations()
    elapsed = time.monotonic() - t0
    _report(3, "invariant identities",
            all(ok for _, _, ok in inv48) and len(inv48) == 48
            and all(ok for _, ok in rows) and all(ok for _, ok in rels)
            and elapsed < 120.0,
            f"48 invariance identities, 10 symbolic rows, 9 relation rows "
            f"in {elapsed:.1f}s (< 120s)")


def test_criterion_04_nilpotent_suite():
    all_nilpotents = [nilpotent_representative(o) for o in range(1, 32)]
    for i, parts in sorted(tables.NIJ.items()):
        for j in range(1, len(parts) + 1):
            all_nilpotents.append(mixed_nilpotent_part(i, j))
    ok_nilp = all(
        (x.is_zero() or is_nilpotent(x)) and evaluate_signature(x).is_zero()
        for x in all_nilpotents)
    buckets = {}
    for o in range(1, 32):
        buckets.setdefault(
            prefilter_signature(nilpotent_representative(o)), []).append(o)
    tied = [v for v in buckets.values() if len(v) > 1]
    limits = Limits(max_degree=14, time_budget=60.0)
    bad_pairs = []
    npairs = 0
    for bucket in tied:
        for a, b in itertools.combinations(bucket, 2):
            npairs += 1
            ans = direct_system_answer(nilpotent_representative(a),
                                       nilpotent_representative(b), limits)
            if ans != "no":
                bad_pairs.append((a, b, ans))
    _report(4, "nilpotent suite",
            ok_nilp and not bad_pairs,
            f"{len(all_nilpotents)} nilpotents on the invariant cone; "
            f"{len(buckets)} filter buckets; {npairs} tied cross pairs all "
            f"separated by ideal triviality")


def test_criterion_05_census():
    c = census()
    ok = (c["g0_total"] == 87 and c["g0_nilpotent"] == 31
          and c["g0_semisimple"] == 10 and c["g0_mixed"] == 46
          and c["s_total"] == 27 and c["s_nilpotent"] == 9
          and c["s_semisimple"] == 6 and c["s_mixed"] == 12)
    _report(5, "census", ok, f"{c['g0_total']} = 31+10+46 local classes, "
            f"{c['s_total']} = 9+6+12 permutation-level classes")


def test_criterion_06_stabilizer_selfcheck():
    t0 = time.monotonic()
    rows = stabilizer_selfcheck()
    elapsed = time.monotonic() - t0
    bad = [name for name, ok in rows if not ok]
    _report(6, "stabiliser self-check", not bad and elapsed < 60.0,
            f"{len(rows)} table rows (generators + sampled identity "
            f"components) in {elapsed:.1f}s (< 60s); failures: {bad}")


def test_criterion_07_centralizer_dimensions():
    ids = []
    deriveds = []
    for fam in range(1, 11):
        ci = centralizer(semisimple_representative(
            fam, DEFAULT_FAMILY_PARAMS[fam]))
        ids.append(ci.dim_even)
        deriveds.append(ci.derived_dim)
    ok = (tuple(ids) == (0, 1, 3, 2, 2, 2, 6, 6, 6, 3)
          and tuple(deriveds) == (0, 3, 8, 6, 6, 6, 15, 15, 15, 9))
    _report(7, "centraliser dimensions", ok,
            f"identity dims {tuple(ids)}, derived dims {tuple(deriveds)}")


def test_criterion_08_roundtrip_classification():
    t0 = time.monotonic()
    limits = Limits(max_degree=14, time_budget=60.0)
    canon = {f: canonical_parameters(f, p)
             for f, p in DEFAULT_FAMILY_PARAMS.items()}
    labels = all_g0_labels(canon)
    failures = []
    for lab in labels:
        r = classify_state(representative(lab), limits)
        ok = (r.exactness == "exact" and r.label is not None
              and r.label.key() == lab.key()
              and tuple(r.label.parameters) == tuple(lab.parameters))
        if not ok:
            failures.append(str(lab))
    elapsed = time.monotonic() - t0
    _report(8, "round-trip classification",
            not failures and elapsed < 1800.0,
            f"all 87 classes exact in {elapsed:.0f}s (< 1800s); "
            f"failures: {failures[:4]}")


def test_criterion_09_jordan_correctness():
    bad = []
    for i, parts in sorted(tables.NIJ.items()):
        s = semisimple_representative(i, DEFAULT_FAMILY_PARAMS[i])
        for j in range(1, len(parts) + 1):
            n = mixed_nilpotent_part(i, j)
            jp = jordan_decompose(s + n)
            if jp.s != s or jp.n != n:
                bad.append((i, j))
    rng = random.Random(2024)
    disagreements = 0
    for _ in range(200):
        amps = [gr(rng.randrange(-2, 3), rng.randrange(-2, 3))
                if rng.random() < 0.4 else ZERO for _ in range(16)]
        try:
            is_nilpotent(StateVector(amps))
        except Exception:  # noqa: BLE001 - raised exactly on disagreement
            disagreements += 1
    _report(9, "jordan correctness", not bad and disagreements == 0,
            f"46 mixed decompositions exact; ad-nilpotency vs invariant cone "
            f"agreed on 200 random states")


def test_criterion_10_s_table_replay():
    limits = Limits(max_degree=14, time_budget=120.0)
    unknowns = []
    failures = []
    count = 0
    for i, parts in sorted(tables.NIJ.items()):
        for j in range(1, len(parts) + 1):
            count += 1
            nfam, _ = mixed_sclass(i, j)
            v = s_conjugate(mixed_nilpotent_part(i, j),
                            sclass_nilpotent_rep(nfam), limits)
            if v.answer == "unknown":
                unknowns.append((i, j))
            elif v.answer != "yes":
                failures.append((i, j))
    if unknowns and not failures:
        # the one criterion permitted a partial outcome
        print(f"[PARTIAL] criterion 10: S-table replay - {len(unknowns)} "
              f"resource-limited instances: {unknowns}")
        return
    _report(10, "S-table replay", not failures,
            f"{count} nilpotent parts matched their catalog "
            f"permutation-level classes; resource-limited: {unknowns}")
