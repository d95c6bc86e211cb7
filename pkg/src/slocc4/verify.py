"""Replayable verification suites behind `slocc4 verify` and the test suite.

Each suite returns a list of Check records; a suite passes when every check
does.  The expensive Gröbner-backed suites (nilpotent separation, the
permutation-level table replay) are individually addressable so quick runs
can skip them.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import catalog, tables
from .algebra import ALL_PERMUTATIONS, StateVector, cartan, get_algebra
from .classify import canonical_parameters, classify_state
from .conjugacy import (
    direct_system_answer, prefilter_signature, s_conjugate,
)
from .groebner import Limits
from .invariants import (
    check_infinitesimal_invariance, check_relations,
    check_symbolic_family_values, evaluate_signature, load_invariants,
)
from .jordan import centralizer, is_nilpotent, jordan_decompose
from .scalars import gr
from .weyl import get_weyl


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _mk(suite: str):
    checks: List[Check] = []

    def add(name: str, passed: bool, detail: str = ""):
        checks.append(Check(suite, name, bool(passed), detail))

    return checks, add


# ---------------------------------------------------------------------------


def suite_algebra() -> List[Check]:
    checks, add = _mk("algebra")
    A = get_algebra()
    add("dim g = 28 (12 even + 16 odd)",
        len(A.basis_element(0).coords()) == 28)
    add("Jacobi identity on all basis triples", A.verify_jacobi_all() == 3276,
        "3276 triples")
    commute = all(A.bracket_odd_odd(cartan(i), cartan(j)).is_zero()
                  for i in range(1, 5) for j in range(1, 5))
    add("[u_i, u_j] = 0", commute)
    try:
        A.verify_theta_automorphism()
        add("grading sign map is an automorphism", True)
    except Exception as e:  # noqa: BLE001 - report, not crash
        add("grading sign map is an automorphism", False, str(e))
    bad = []
    for sigma in ALL_PERMUTATIONS:
        try:
            A.verify_sym4_automorphism(sigma)
        except Exception:  # noqa: BLE001
            bad.append(sigma)
    add("all 24 qubit permutations are automorphisms", not bad, str(bad))
    return checks


def suite_weyl() -> List[Check]:
    checks, add = _mk("weyl")
    W = get_weyl()
    add("|W| = 192", len(W.elements) == 192)
    add("24 roots, 12 positive", len(W.roots) == 24 and len(W.positive) == 12)
    types = sorted(c.type_name for c in W.classes.values())
    add("11 complete subsystem classes with the expected type multiset",
        types == sorted(["empty", "A1", "A2", "2A1", "2A1", "2A1",
                         "A3", "A3", "A3", "3A1", "D4"]))
    add("exactly one non-complete class, of type 4A1",
        len(W.noncomplete_classes) == 1
        and W.noncomplete_classes[0].type_name == "4A1")
    orders = tuple(W.gamma_group(l).order for l in range(1, 12))
    add("Gamma orders (192, 8, 2, 8, 8, 8, 2, 2, 2, 2, 1)",
        orders == (192, 8, 2, 8, 8, 8, 2, 2, 2, 2, 1), str(orders))
    return checks


def suite_invariants() -> List[Check]:
    checks, add = _mk("invariants")
    inv = load_invariants()
    add("term counts (8, 24, 24, 144) at degrees (2, 4, 4, 6)",
        [len(p) for p in inv.as_tuple()] == [8, 24, 24, 144]
        and [p.total_degree() for p in inv.as_tuple()] == [2, 4, 4, 6])
    rep = check_infinitesimal_invariance()
    add("48 infinitesimal-invariance identities",
        all(ok for _, _, ok in rep) and len(rep) == 48)
    rows = check_symbolic_family_values()
    add("symbolic invariant values match all 10 family rows",
        all(ok for _, ok in rows), str([l for l, ok in rows if not ok]))
    rels = check_relations()
    add("relation-ideal generators vanish on rows 2..10",
        all(ok for _, ok in rels), str([l for l, ok in rels if not ok]))
    return checks


def suite_census() -> List[Check]:
    checks, add = _mk("catalog")
    c = catalog.census()
    add("87 classes at the local-group level (31 + 10 + 46)",
        c["g0_total"] == 87 and c["g0_nilpotent"] == 31
        and c["g0_semisimple"] == 10 and c["g0_mixed"] == 46, str(c))
    add("mixed counts per family 1,2,3x4,3x6,13",
        catalog.mixed_counts() == {2: 1, 3: 2, 4: 4, 5: 4, 6: 4,
                                   7: 6, 8: 6, 9: 6, 10: 13})
    add("27 classes under qubit permutations (9 + 6 + 12)",
        c["s_total"] == 27 and c["s_nilpotent"] == 9
        and c["s_semisimple"] == 6 and c["s_mixed"] == 12, str(c))
    derived = []
    for i in (5, 6, 8, 9):
        base, sigma = tables.SYM_REDUCTION[i]
        A = get_algebra()
        ok = all(
            A.sym4_act(sigma, catalog.mixed_nilpotent_part(base, j + 1))
            == catalog.mixed_nilpotent_part(i, j + 1)
            for j in range(len(tables.NIJ[base])))
        derived.append(ok)
    add("families 5,6,8,9 nilpotent parts agree with the qubit-swap images",
        all(derived))
    return checks


def suite_stabilizers() -> List[Check]:
    checks, add = _mk("catalog")
    rows = catalog.stabilizer_selfcheck()
    bad = [name for name, ok in rows if not ok]
    add(f"stabiliser self-check over {len(rows)} table rows", not bad, str(bad))
    return checks


def suite_centralizers() -> List[Check]:
    checks, add = _mk("catalog")
    expected_identity = tables.SEMISIMPLE_STABILIZER_DIMS
    got = []
    got_derived = []
    for fam in range(1, 11):
        params = catalog.DEFAULT_FAMILY_PARAMS[fam]
        ci = centralizer(catalog.semisimple_representative(fam, params))
        got.append(ci.dim_even)
        got_derived.append(ci.derived_dim)
    add("identity-component dims match (0,1,3,2,2,2,6,6,6,3)",
        tuple(got) == expected_identity, str(got))
    expect_derived = tuple(tables.FAMILY_DERIVED_DIMS[f] for f in range(1, 11))
    add("derived centraliser dims match (0,3,8,6,6,6,15,15,15,9)",
        tuple(got_derived) == expect_derived, str(got_derived))
    dims_zg = tuple(tables.FAMILY_CENTRALIZER_DIMS[f] for f in range(1, 11))
    got_zg = []
    for fam in range(1, 11):
        params = catalog.DEFAULT_FAMILY_PARAMS[fam]
        got_zg.append(centralizer(
            catalog.semisimple_representative(fam, params)).dim)
    add("full centraliser dims match 4 + |Pi_i|", tuple(got_zg) == dims_zg,
        str(got_zg))
    return checks


def suite_nilpotent(time_budget: float = 60.0) -> List[Check]:
    checks, add = _mk("nilpotent")
    all_nilpotents: List[Tuple[str, StateVector]] = []
    for orbit, _, _, _ in tables.NILPOTENT_ORBITS:
        all_nilpotents.append((f"orbit {orbit}",
                               catalog.nilpotent_representative(orbit)))
    for i, parts in sorted(tables.NIJ.items()):
        for j in range(1, len(parts) + 1):
            all_nilpotents.append((f"n_{{{i},{j}}}",
                                   catalog.mixed_nilpotent_part(i, j)))
    bad = []
    for name, x in all_nilpotents:
        if x.is_zero():
            ok = evaluate_signature(x).is_zero()
        else:
            ok = is_nilpotent(x) and evaluate_signature(x).is_zero()
        if not ok:
            bad.append(name)
    add(f"all {len(all_nilpotents)} nilpotent states are ad-nilpotent with "
        "vanishing invariants", not bad, str(bad))

    buckets: Dict[object, List[int]] = {}
    for orbit, _, _, _ in tables.NILPOTENT_ORBITS:
        rep = catalog.nilpotent_representative(orbit)
        buckets.setdefault(prefilter_signature(rep), []).append(orbit)
    tied = [v for v in buckets.values() if len(v) > 1]
    add("filter signatures split the 31 orbits into buckets",
        sum(len(v) for v in buckets.values()) == 31,
        f"{len(buckets)} buckets, tied: {tied}")
    limits = Limits(max_degree=14, time_budget=time_budget)
    failures = []
    pairs = 0
    for bucket in tied:
        for a, b in itertools.combinations(bucket, 2):
            pairs += 1
            ans = direct_system_answer(
                catalog.nilpotent_representative(a),
                catalog.nilpotent_representative(b), limits)
            if ans != "no":
                failures.append((a, b, ans))
    add(f"ideal triviality separates every tied cross pair ({pairs} pairs)",
        not failures, str(failures))
    return checks


def suite_jordan(samples: int = 200, seed: int = 2024) -> List[Check]:
    checks, add = _mk("jordan")
    bad = []
    for i, parts in sorted(tables.NIJ.items()):
        params = catalog.DEFAULT_FAMILY_PARAMS[i]
        s = catalog.semisimple_representative(i, params)
        for j in range(1, len(parts) + 1):
            n = catalog.mixed_nilpotent_part(i, j)
            jp = jordan_decompose(s + n)
            if jp.s != s or jp.n != n:
                bad.append((i, j))
    add("jordan_decompose(s + n) = (s, n) on all 46 mixed samples", not bad,
        str(bad))
    rng = random.Random(seed)
    disagreements = 0
    nil_count = 0
    for _ in range(samples):
        amps = [gr(rng.randrange(-2, 3), rng.randrange(-2, 3))
                if rng.random() < 0.4 else gr(0) for _ in range(16)]
        x = StateVector(amps)
        try:
            if is_nilpotent(x):
                nil_count += 1
        except Exception as e:  # noqa: BLE001 - the two tests disagreed
            disagreements += 1
    add(f"ad-nilpotency agrees with the invariant-cone test on {samples} "
        f"random states ({nil_count} nilpotent)", disagreements == 0)
    return checks


def suite_roundtrip(limits: Optional[Limits] = None) -> List[Check]:
    checks, add = _mk("roundtrip")
    limits = limits or Limits(max_degree=14, time_budget=60.0)
    canon = {f: canonical_parameters(f, p)
             for f, p in catalog.DEFAULT_FAMILY_PARAMS.items()}
    labels = catalog.all_g0_labels(canon)
    failures = []
    for lab in labels:
        x = catalog.representative(lab)
        r = classify_state(x, limits)
        ok = (r.exactness == "exact" and r.label is not None
              and r.label.key() == lab.key()
              and tuple(r.label.parameters) == tuple(lab.parameters))
        if not ok:
            failures.append((str(lab), r.exactness,
                             str(r.label) if r.label else None))
    add("all 87 classes classify back to their own label, exactly",
        not failures, str(failures[:6]))
    return checks


def suite_stable(time_budget: float = 120.0) -> List[Check]:
    """The permutation-level table replay; the one suite allowed 'partial'."""
    checks, add = _mk("stable")
    limits = Limits(max_degree=14, time_budget=time_budget)
    unknowns = []
    failures = []
    count = 0
    for i, parts in sorted(tables.NIJ.items()):
        for j in range(1, len(parts) + 1):
            count += 1
            nfam, _ = catalog.mixed_sclass(i, j)
            v = s_conjugate(catalog.mixed_nilpotent_part(i, j),
                            catalog.sclass_nilpotent_rep(nfam), limits)
            if v.answer == "unknown":
                unknowns.append((i, j))
            elif v.answer != "yes":
                failures.append((i, j))
    detail = f"{count} instances"
    if unknowns:
        # resource exhaustion marks the suite partial, never failed
        detail += f"; PARTIAL, resource-limited instances: {unknowns}"
    add("every nilpotent part is permutation-conjugate to its table target",
        not failures, detail)
    return checks


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "algebra": suite_algebra,
    "weyl": suite_weyl,
    "invariants": suite_invariants,
    "catalog": lambda: suite_census() + suite_stabilizers() + suite_centralizers(),
    "nilpotent": suite_nilpotent,
    "roundtrip": lambda: suite_roundtrip() + suite_jordan(),
    "stable": suite_stable,
}

SUITE_ORDER = ("algebra", "weyl", "invariants", "catalog", "nilpotent",
               "roundtrip", "stable")


def run_suites(names) -> Tuple[List[Check], float]:
    t0 = time.monotonic()
    out: List[Check] = []
    for name in names:
        out.extend(SUITES[name]())
    return out, time.monotonic() - t0
