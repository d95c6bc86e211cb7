"""Mapping an arbitrary exact state to its orbit class.

The pipeline is Jordan decomposition first, then per-part classification:

  semisimple  - family from the centraliser dimensions of the semisimple
                part, disambiguated by the vanishing pattern of the
                invariants; parameters recovered by inverting the symbolic
                invariant values (closed forms per family; the generic
                family reduces to a cubic eliminant whose Q(i) roots come
                from divisor search)
  nilpotent   - filter buckets over the 31 catalog orbits, ties broken by
                ideal-triviality tests against the candidates
  mixed       - the family of the semisimple part plus the nilpotent-part
                index, candidates eliminated by filters and triviality tests

A report is exact only when the recovered class is confirmed; if parameters
live outside Q(i) or resource limits bite, the report is partial and says
what was narrowed down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

from . import catalog, tables
from .algebra import StateVector
from .catalog import OrbitClassLabel, StabilizerDescriptor
from .conjugacy import (
    direct_system_answer, local_rank_profile, prefilter_signature,
)
from .groebner import DEFAULT_LIMITS, Limits
from .invariants import InvariantSignature, evaluate_signature
from .jordan import JordanPair, centralizer, jordan_decompose
from .poly import UniPoly
from .roots import gaussian_rational_roots
from .scalars import ONE, ZERO, GaussianRational, Rat, gr, gr_sqrt
from .weyl import get_weyl


@dataclass
class ClassificationReport:
    input: StateVector
    jordan: JordanPair
    signature: InvariantSignature
    label: Optional[OrbitClassLabel]
    normal_form: Optional[StateVector]
    stabilizer: Optional[StabilizerDescriptor]
    s_class: Optional[Tuple[str, str]]
    s_parameters: Tuple[GaussianRational, ...]
    exactness: str                    # exact | partial
    notes: List[str] = field(default_factory=list)


class ClassificationError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# semisimple family determination


_DIMS_TO_FAMILY = {(4, 0): (1,), (6, 3): (2,), (10, 8): (3,),
                   (8, 6): (4, 5, 6), (16, 15): (7, 8, 9), (10, 9): (10,)}


def semisimple_family(s: StateVector) -> int:
    """Family 1..10 of a nonzero semisimple state."""
    ci = centralizer(s)
    key = (ci.dim, ci.derived_dim)
    if key not in _DIMS_TO_FAMILY:
        raise ClassificationError(f"no semisimple family with dims {key}")
    cands = _DIMS_TO_FAMILY[key]
    if len(cands) == 1:
        return cands[0]
    sig = evaluate_signature(s)
    H, L, M, D = sig.as_tuple()
    four = gr(4)
    if cands == (4, 5, 6):
        if not L and not D and M:
            return 4
        if not M and not D and L:
            return 5
        if L and L == -M:
            return 6
    else:
        if not L and not D and not (H * H + four * M):
            return 7
        if not M and not D and not (H * H - four * L):
            return 8
        if L == -M and not (H * H - four * M):
            return 9
    raise ClassificationError(
        f"vanishing pattern does not match any family in {cands}: {sig}")


# ---------------------------------------------------------------------------
# parameter recovery (inverting the symbolic invariant table)


def _sqrts(z: GaussianRational) -> List[GaussianRational]:
    r = gr_sqrt(z)
    if r is None:
        return []
    return [r] if not r else [r, -r]


def _quadratic_roots(b: GaussianRational, c: GaussianRational
                     ) -> List[GaussianRational]:
    """Roots of t^2 + b t + c over Q(i)."""
    disc = b * b - gr(4) * c
    out = []
    for s in _sqrts(disc):
        out.append((-b + s) / gr(2))
    return sorted(set(out), key=lambda z: z.sort_key())


def semisimple_parameters(family: int, sig: InvariantSignature
                          ) -> Tuple[List[Tuple[GaussianRational, ...]], str]:
    """All Q(i) parameter tuples with the given invariant values.

    Returns (solutions, note); an empty solution list with a note means the
    parameters exist only in an extension of Q(i).
    """
    H, L, M, D = sig.as_tuple()
    candidates: List[Tuple[GaussianRational, ...]] = []
    note = ""
    if family == 10:
        candidates = [(r,) for r in _sqrts(H)]
        if not candidates:
            note = f"l1^2 = {H} has no square root in Q(i)"
    elif family in (7, 8, 9):
        half = H / gr(2)
        candidates = [(r,) for r in _sqrts(half)]
        if not candidates:
            note = f"l1^2 = {half} has no square root in Q(i)"
    elif family in (4, 5, 6):
        if family == 4:
            pair = _quadratic_roots(-H, -M)
        elif family == 5:
            pair = _quadratic_roots(-H, L)
        else:
            pair = _quadratic_roots(-H, -L)
        for p in pair:
            q = H - p
            for l1 in _sqrts(p):
                for l2 in _sqrts(q):
                    candidates.append((l1, l2))
        if not candidates:
            note = "the eigenvalue squares are irrational over Q(i)"
    elif family == 2:
        # cubic in s = l1^2 + l2^2: ((H-s)s - L + M)(2s - H) = 2D
        two = gr(2)
        cubic = _cubic_from_family2(H, L, M, D)
        rs = gaussian_rational_roots(cubic)
        if rs is None:
            return [], "eliminant divisor search overflowed"
        for s in rs:
            r = H - s
            pq = ((H - s) * s - L + M) / two
            for p in _quadratic_roots(-s, pq):
                q = s - p
                if p * (r - q) != L or q * (p - r) != M:
                    continue
                for l1 in _sqrts(p):
                    for l2 in _sqrts(q):
                        for l3 in _sqrts(r):
                            candidates.append((l1, l2, l3))
        if not candidates:
            note = "no Q(i) point solves the family-2 system"
    elif family == 3:
        # 3 w^4 - 2 H w^3 + M^2 = 0 with w = l1^2
        quartic = UniPoly((M * M, ZERO, ZERO, -gr(2) * H, gr(3)))
        rs = gaussian_rational_roots(quartic)
        if rs is None:
            return [], "eliminant divisor search overflowed"
        for w in rs:
            for l1 in _sqrts(w):
                disc = gr(2) * H - gr(3) * w
                for sq in _sqrts(disc):
                    l2 = (-l1 + sq) / gr(2)
                    candidates.append((l1, l2))
        if not candidates:
            note = "no Q(i) point solves the family-3 system"
    elif family == 1:
        four = gr(4)
        cubic = UniPoly((
            -gr(16) * D * D,
            gr(8) * H * D - gr(16) * L * M,
            four * L - four * M - H * H,
            ONE,
        ))
        rs = gaussian_rational_roots(cubic)
        if rs is None:
            return [], "eliminant divisor search overflowed"
        for t in rs:
            for A in _sqrts(t):
                for B in _sqrts(t + four * L):
                    for C in _sqrts(t - four * M):
                        if A * B * C != H * t - four * D:
                            continue
                        ps = ((H + A + B + C) / four, (H + A - B - C) / four,
                              (H - A + B - C) / four, (H - A - B + C) / four)
                        branches = [[]]
                        for p in ps:
                            sq = _sqrts(p)
                            if not sq:
                                branches = []
                                break
                            branches = [br + [r] for br in branches for r in sq]
                        for br in branches:
                            candidates.append(tuple(br))
        if not candidates:
            note = "no Q(i) point solves the generic-family system"
    else:
        raise ClassificationError(f"family {family} takes no parameters")
    # verify every candidate exactly and drop the rest
    verified = []
    for cand in candidates:
        try:
            catalog.check_family_constraints(family, cand)
        except catalog.CatalogError:
            continue
        rep = catalog.semisimple_representative(family, cand)
        if evaluate_signature(rep).as_tuple() == sig.as_tuple():
            verified.append(cand)
    seen = set()
    unique = []
    for cand in verified:
        if cand not in seen:
            seen.add(cand)
            unique.append(cand)
    if not unique and not note:
        note = "candidate parameters failed exact verification"
    return unique, note


def _cubic_from_family2(H, L, M, D):
    # expand ((H-s)s - L + M)(2s - H) - 2D as a polynomial in s
    two = gr(2)
    c3 = -two
    c2 = gr(3) * H
    c1 = -(H * H) + two * (M - L)
    c0 = -(H * (M - L)) - two * D
    return UniPoly((c0, c1, c2, c3))


# ---------------------------------------------------------------------------
# canonical parameters


@lru_cache(maxsize=None)
def _gamma_param_matrices(family: int):
    W = get_weyl()
    return tuple(W.gamma_param_action(family))


def canonical_parameters(family: int, params: Tuple[GaussianRational, ...]
                         ) -> Tuple[GaussianRational, ...]:
    """Lexicographically smallest Gamma image (re-then-im order)."""
    best = None
    for mat in _gamma_param_matrices(family):
        img = tuple(
            sum((GaussianRational(c) * x for c, x in zip(row, params)),
                start=ZERO) for row in mat)
        key = tuple(v.canonical_key() for v in img)
        if best is None or key < best[0]:
            best = (key, img)
    return best[1]


@lru_cache(maxsize=8)
def _sclass_param_group(family: int):
    """The parameter matrix group of the permutation-level table row."""
    spec = tables.SCLASS_PARAM_GROUPS[family]
    if spec[0] == "pq":
        import itertools
        gens = []
        for perm in itertools.permutations(range(4)):
            for signs in itertools.product((1, -1), repeat=4):
                gens.append(tuple(tuple(Rat(signs[r]) if perm[r] == c else Rat(0)
                                        for c in range(4)) for r in range(4)))
        q = tuple(tuple(Rat(x) for x in row) for row in tables.Q_MATRIX)
        return _matrix_closure(gens + [q], dim=4, bound=1200)
    if spec[0] == "signed_perms":
        import itertools
        n = spec[1]
        out = []
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((1, -1), repeat=n):
                out.append(tuple(tuple(Rat(signs[r]) if perm[r] == c else Rat(0)
                                       for c in range(n)) for r in range(n)))
        return tuple(out)
    gens = [tuple(tuple(Rat(x) for x in row) for row in g) for g in spec[1]]
    dim = len(gens[0])
    return _matrix_closure(gens, dim=dim, bound=64)


def _matrix_closure(gens, dim, bound):
    eye = tuple(tuple(Rat(1) if i == j else Rat(0) for j in range(dim))
                for i in range(dim))
    seen = {eye}
    queue = [eye]
    while queue:
        m = queue.pop()
        for g in gens:
            nm = tuple(tuple(sum(g[i][k] * m[k][j] for k in range(dim))
                             for j in range(dim)) for i in range(dim))
            if nm not in seen:
                seen.add(nm)
                if len(seen) > bound:
                    raise ClassificationError("parameter group closure exploded")
                queue.append(nm)
    return tuple(sorted(seen))


def s_normal_form(label: OrbitClassLabel) -> Tuple[
        Tuple[GaussianRational, ...], Tuple[str, str], int, Optional[int]]:
    """Canonical parameters under the permutation-level group, plus the
    S-class tag and the (reduced family, reduced j) the row lives in."""
    sclass = catalog.sclass_of(label)
    if label.kind == "nilpotent":
        return (), sclass, 0, None
    family = label.family
    params = label.parameters
    if family in tables.SYM_REDUCTION:
        family = tables.SYM_REDUCTION[family][0]
    group = _sclass_param_group(family)
    best = None
    for mat in group:
        img = tuple(
            sum((GaussianRational(c) * x for c, x in zip(row, params)),
                start=ZERO) for row in mat)
        key = tuple(v.canonical_key() for v in img)
        if best is None or key < best[0]:
            best = (key, img)
    reduced_j = None
    if label.kind == "mixed":
        nfam, _ = sclass
        for (fi, fj), (df, _, _, _) in tables.MIXED_STABILIZERS.items():
            if fi == family and tables.MIXED_PART_SCLASS[(fi, fj)][0] == nfam:
                reduced_j = fj
                break
    return best[1], sclass, family, reduced_j


# ---------------------------------------------------------------------------
# nilpotent classification


@lru_cache(maxsize=1)
def _nilpotent_catalog():
    out = []
    for orbit, _, _, _ in tables.NILPOTENT_ORBITS:
        rep = catalog.nilpotent_representative(orbit)
        out.append((orbit, rep, prefilter_signature(rep),
                    local_rank_profile(rep)))
    return out


def nilpotent_candidates(x: StateVector) -> List[int]:
    """Orbits whose full filter data matches x (spec filters + local ranks)."""
    pf = prefilter_signature(x)
    lr = local_rank_profile(x)
    return [orbit for orbit, _, pf2, lr2 in _nilpotent_catalog()
            if pf2 == pf and lr2 == lr]


def classify_nilpotent(x: StateVector, limits: Limits = DEFAULT_LIMITS
                       ) -> Tuple[Optional[int], List[int], List[str]]:
    """(orbit or None, surviving candidates, notes)."""
    notes: List[str] = []
    cands = nilpotent_candidates(x)
    if not cands:
        raise ClassificationError(
            "nilpotent state matches no catalog bucket; the catalog is complete, "
            "so this indicates a bug")
    if len(cands) == 1:
        return cands[0], cands, notes
    reps = {o: catalog.nilpotent_representative(o) for o in cands}
    for o in cands:
        if x == reps[o]:
            return o, [o], notes
    alive = []
    for o in cands:
        ans = direct_system_answer(x, reps[o], limits)
        if ans == "yes":
            return o, [o], notes
        if ans == "unknown":
            notes.append(f"triviality test against orbit {o} exhausted resources")
            alive.append(o)
    if len(alive) == 1:
        return alive[0], alive, notes
    if not alive:
        raise ClassificationError(
            "nilpotent state excluded from every catalog orbit; impossible")
    return None, alive, notes


# ---------------------------------------------------------------------------
# the classifier


def classify_state(x: StateVector, limits: Limits = DEFAULT_LIMITS
                   ) -> ClassificationReport:
    jp = jordan_decompose(x)
    sig = evaluate_signature(x)
    notes: List[str] = []
    if x.is_zero():
        label = OrbitClassLabel("nilpotent", orbit=31)
        return ClassificationReport(
            x, jp, sig, label, StateVector.zero(), catalog.stabilizer_of(label),
            catalog.nilpotent_sclass(31), (), "exact", notes)
    if jp.s.is_zero():
        orbit, cands, nnotes = classify_nilpotent(x, limits)
        notes.extend(nnotes)
        if orbit is None:
            notes.append(f"candidate orbits: {cands}")
            return ClassificationReport(
                x, jp, sig, None, None, None, None, (), "partial", notes)
        label = OrbitClassLabel("nilpotent", orbit=orbit)
        return ClassificationReport(
            x, jp, sig, label, catalog.nilpotent_representative(orbit),
            catalog.stabilizer_of(label), catalog.nilpotent_sclass(orbit),
            (), "exact", notes)

    family = semisimple_family(jp.s)
    solutions, note = semisimple_parameters(family, sig)
    if note:
        notes.append(note)
    params = None
    if solutions:
        canon = {canonical_parameters(family, tuple(sol)) for sol in solutions}
        if len(canon) != 1:
            raise ClassificationError(
                f"parameter recovery produced {len(canon)} inequivalent tuples")
        params = next(iter(canon))

    if jp.n.is_zero():
        if params is None:
            notes.append(f"family {family}; parameters outside Q(i)")
            return ClassificationReport(
                x, jp, sig, None, None, None, ("S", "D1"), (), "partial", notes)
        label = OrbitClassLabel("semisimple", family=family, parameters=params)
        sparams, sclass, _, _ = s_normal_form(label)
        return ClassificationReport(
            x, jp, sig, label, catalog.representative(label),
            catalog.stabilizer_of(label), sclass, sparams, "exact", notes)

    # mixed: narrow the nilpotent-part index
    n_orbit, n_cands, n_notes = classify_nilpotent(jp.n, limits)
    notes.extend(n_notes)
    all_j = list(range(1, len(tables.NIJ[family]) + 1))
    j_orbits = {j: _nij_orbit(family, j) for j in all_j}
    j_cands = [j for j in all_j
               if n_orbit is None or j_orbits[j] == n_orbit or j_orbits[j] is None]
    if params is None:
        notes.append(
            f"mixed state in family {family}; parameters outside Q(i); "
            f"nilpotent part narrows j to {j_cands}")
        return ClassificationReport(
            x, jp, sig, None, None, None, None, (), "partial", notes)

    pf_x = prefilter_signature(x)
    lr_x = local_rank_profile(x)
    alive = []
    decided = None
    for j in j_cands:
        y = catalog.semisimple_representative(family, params) + \
            catalog.mixed_nilpotent_part(family, j)
        if x == y:
            decided = j
            break
        if prefilter_signature(y) != pf_x or local_rank_profile(y) != lr_x:
            continue
        alive.append(j)
    if decided is None:
        if len(alive) == 1:
            decided = alive[0]
        elif len(alive) > 1:
            survivors = []
            for j in alive:
                y = catalog.semisimple_representative(family, params) + \
                    catalog.mixed_nilpotent_part(family, j)
                ans = direct_system_answer(x, y, limits)
                if ans == "yes":
                    decided = j
                    break
                if ans == "unknown":
                    survivors.append(j)
                    notes.append(
                        f"triviality test against j={j} exhausted resources")
            if decided is None:
                if len(survivors) == 1:
                    decided = survivors[0]
                else:
                    notes.append(f"mixed family {family}, surviving j: "
                                 f"{survivors or alive}")
                    return ClassificationReport(
                        x, jp, sig, None, None, None, None, (),
                        "partial", notes)
        else:
            raise ClassificationError(
                "mixed state matches no nilpotent-part candidate; impossible "
                "for a complete catalog")
    label = OrbitClassLabel("mixed", family=family, j=decided,
                            parameters=params)
    sparams, sclass, _, _ = s_normal_form(label)
    return ClassificationReport(
        x, jp, sig, label, catalog.representative(label),
        catalog.stabilizer_of(label), sclass, sparams, "exact", notes)


@lru_cache(maxsize=None)
def _nij_orbit(family: int, j: int) -> Optional[int]:
    n = catalog.mixed_nilpotent_part(family, j)
    orbit, cands, _ = classify_nilpotent(n, Limits(max_degree=14, time_budget=30.0))
    return orbit
