"""Deciding conjugacy of two states, with and without qubit permutations.

The decision pipeline follows a fixed order: invariant comparison first
(complete for semisimple states), then the orbit-invariant prefilter, then
the polynomial route: the matrix-entry system g.a = b plus the determinant
constraints, decided by Gröbner triviality, or — cheaper and usually
sufficient — exact classification of both sides against the catalog.

Witness extraction is best-effort and opt-in: random linear slices cut the
solution coset down to dimension zero, a lex basis is computed, and roots
are read off by back-substitution over Q(i).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    ALL_PERMUTATIONS, SL2Quad, StateVector, get_algebra,
)
from .groebner import DEFAULT_LIMITS, Ideal, Limits, buchberger, contains_one
from .invariants import evaluate_signature
from .jordan import ad_rank_sequence, centralizer, is_semisimple
from .poly import MultiPoly, PolyRing, UniPoly
from .roots import gaussian_rational_roots
from .scalars import ONE, ZERO, GaussianRational, gr

VAR_NAMES = tuple(f"{m}{i}{j}" for m in "abcd" for i in (1, 2) for j in (1, 2))
GRING = PolyRing(16, "degrevlex", names=VAR_NAMES)


@dataclass
class ConjugacyVerdict:
    answer: str                                # yes | no | unknown
    route: str                                 # invariant_criterion | prefilter | groebner
    witness: Optional[SL2Quad] = None
    permutation: Optional[Tuple[int, int, int, int]] = None
    detail: str = ""


# ---------------------------------------------------------------------------
# orbit-invariant fingerprints


@lru_cache(maxsize=4096)
def prefilter_signature(x: StateVector):
    """(nilpotent?, centraliser dims, ad-rank sequence, invariant signature)."""
    ci = centralizer(x)
    ranks = ad_rank_sequence(x)
    sig = evaluate_signature(x)
    nilp = sig.is_zero() and ranks[-1] == 0
    return (nilp, ci.dims(), ranks, sig.as_tuple())


@lru_cache(maxsize=4096)
def local_rank_profile(x: StateVector) -> Tuple[int, int, int, int]:
    """Ranks of the four one-factor flattenings; SL(2)^4-invariant."""
    from .algebra import state_bits
    out = []
    for m in range(4):
        rows = [[ZERO] * 8, [ZERO] * 8]
        for k, amp in enumerate(x.amps):
            if amp:
                bits = state_bits(k)
                rest = 0
                for p in range(4):
                    if p != m:
                        rest = (rest << 1) | bits[p]
                rows[bits[m]][rest] = amp
        out.append(linalg.rank(rows))
    return tuple(out)


# ---------------------------------------------------------------------------
# the matrix-entry polynomial system


def conjugating_system(a: StateVector, b: StateVector) -> List[MultiPoly]:
    """16 equations g.a - b (degree 4, multilinear) + 4 determinant equations."""
    from .algebra import state_bits, bits_index
    polys: Dict[int, Dict[tuple, GaussianRational]] = {k: {} for k in range(16)}
    for k, amp in enumerate(a.amps):
        if not amp:
            continue
        bits = state_bits(k)
        # product over factors of the matrix entry (row j_m, column bits[m])
        for target_bits in itertools.product((0, 1), repeat=4):
            expo = [0] * 16
            for m in range(4):
                var = 4 * m + 2 * target_bits[m] + bits[m]
                expo[var] += 1
            tgt = bits_index(target_bits)
            key = tuple(expo)
            polys[tgt][key] = polys[tgt].get(key, ZERO) + amp
    out = []
    zero_mono = (0,) * 16
    for k in range(16):
        terms = dict(polys[k])
        if b.amps[k]:
            terms[zero_mono] = terms.get(zero_mono, ZERO) - b.amps[k]
        p = MultiPoly(GRING, terms)
        if not p.is_zero():
            out.append(p)
    for m in range(4):
        det = {}
        e = [0] * 16
        e[4 * m] = 1
        e[4 * m + 3] = 1
        det[tuple(e)] = ONE
        e = [0] * 16
        e[4 * m + 1] = 1
        e[4 * m + 2] = 1
        det[tuple(e)] = -ONE
        det[zero_mono] = -ONE
        out.append(MultiPoly(GRING, det))
    return out


def direct_system_answer(a: StateVector, b: StateVector,
                         limits: Limits) -> str:
    """'yes'/'no'/'unknown' for conjugacy via ideal triviality of g.a = b."""
    system = conjugating_system(a, b)
    verdict = contains_one(Ideal(system, "degrevlex"), limits)
    if verdict == "yes":
        return "no"      # unsolvable: not conjugate
    if verdict == "no":
        return "yes"     # proper ideal: a conjugating element exists
    return "unknown"


# ---------------------------------------------------------------------------
# witness extraction


def _quad_from_values(values: Sequence[GaussianRational]) -> Optional[SL2Quad]:
    mats = []
    for m in range(4):
        a, b, c, d = values[4 * m: 4 * m + 4]
        if a * d - b * c != ONE:
            return None
        mats.append(((a, b), (c, d)))
    try:
        return SL2Quad(mats)
    except ValueError:
        return None


def _solve_lex_triangular(basis: List[MultiPoly], deadline: float,
                          budget_roots: int = 64) -> List[List[GaussianRational]]:
    """Points of a zero-dimensional lex basis by back-substitution."""
    solutions: List[Dict[int, GaussianRational]] = [{}]
    # substitute from the last variable upward; lex basis has variable 0 largest
    for var in range(15, -1, -1):
        new_solutions = []
        for partial in solutions:
            if time.monotonic() > deadline:
                return []
            candidates = None
            for p in basis:
                if any(m[v] for m in p.terms for v in range(var)):
                    continue  # still involves larger variables
                uni = _restrict_to_variable(p, var, partial)
                if uni is None:
                    continue
                if uni.degree() < 1:
                    if not uni.is_zero():
                        candidates = []
                        break
                    continue
                remaining = max(0.5, min(5.0, deadline - time.monotonic()))
                rs = gaussian_rational_roots(uni, time_budget=remaining)
                if rs is None:
                    continue
                rs_set = set(rs)
                candidates = rs_set if candidates is None else candidates & rs_set
                if not candidates:
                    break
            if candidates is None:
                return []   # a free variable survived; the slice was too loose
            for val in sorted(candidates, key=lambda z: z.sort_key()):
                ext = dict(partial)
                ext[var] = val
                new_solutions.append(ext)
                if len(new_solutions) > budget_roots:
                    return []
        solutions = new_solutions
        if not solutions:
            return []
    return [[sol[v] for v in range(16)] for sol in solutions]


def _restrict_to_variable(p: MultiPoly, var: int,
                          known: Dict[int, GaussianRational]) -> Optional[UniPoly]:
    coeffs: Dict[int, GaussianRational] = {}
    for mono, c in p.terms.items():
        val = c
        for v in range(var + 1, 16):
            e = mono[v]
            if e:
                val = val * (known[v] ** e)
        d = mono[var]
        coeffs[d] = coeffs.get(d, ZERO) + val
    deg = max(coeffs) if coeffs else 0
    out = [coeffs.get(k, ZERO) for k in range(deg + 1)]
    uni = UniPoly(out)
    return uni


def _single_term(x: StateVector):
    found = None
    for k, amp in enumerate(x.amps):
        if amp:
            if found is not None:
                return None
            found = (k, amp)
    return found


def _basis_state_witness(a: StateVector, b: StateVector) -> Optional[SL2Quad]:
    """Direct per-factor witness when both states are single basis terms."""
    from .algebra import state_bits
    ta, tb = _single_term(a), _single_term(b)
    if ta is None or tb is None:
        return None
    (ka, ca), (kb, cb) = ta, tb
    bits_a, bits_b = state_bits(ka), state_bits(kb)
    mats = []
    scalar = ONE
    for m in range(4):
        if bits_a[m] == bits_b[m]:
            mats.append([[ONE, ZERO], [ZERO, ONE]])
        else:
            # [[0,-1],[1,0]] maps e0 -> e1 and e1 -> -e0, determinant 1
            mats.append([[ZERO, -ONE], [ONE, ZERO]])
            if bits_a[m] == 1:
                scalar = -scalar
    missing = cb / (ca * scalar)
    if bits_b[0] == 0:
        mats[0] = [[missing * mats[0][0][0], missing * mats[0][0][1]],
                   [mats[0][1][0] / missing, mats[0][1][1] / missing]]
    else:
        mats[0] = [[mats[0][0][0] / missing, mats[0][0][1] / missing],
                   [missing * mats[0][1][0], missing * mats[0][1][1]]]
    # scaling one row by t and the other by 1/t keeps the determinant
    return SL2Quad([tuple(tuple(r) for r in m) for m in mats])


def find_witness(a: StateVector, b: StateVector, limits: Limits,
                 attempts: int = 6, rng_seed: int = 7) -> Optional[SL2Quad]:
    """Best-effort conjugating element; never affects the yes/no answer."""
    A = get_algebra()
    if a == b:
        return SL2Quad.identity()
    direct = _basis_state_witness(a, b)
    if direct is not None and A.group_act(direct, a) == b:
        return direct
    rng = random.Random(rng_seed)
    system = conjugating_system(a, b)
    ci = centralizer(a)
    stab_dim = ci.dim_even
    deadline = time.monotonic() + limits.time_budget
    per_attempt = Limits(max_degree=limits.max_degree,
                         time_budget=max(2.0, limits.time_budget / attempts))
    for attempt in range(attempts):
        if time.monotonic() > deadline:
            break
        slice_count = max(0, stab_dim + (attempt % 2) - (attempt // 3))
        gens = list(system)
        for _ in range(slice_count):
            terms = {}
            for v in range(16):
                c = rng.randrange(-2, 3)
                if c:
                    e = [0] * 16
                    e[v] = 1
                    terms[tuple(e)] = gr(c)
            terms[(0,) * 16] = gr(rng.randrange(-2, 3))
            gens.append(MultiPoly(GRING, terms))
        res = buchberger(Ideal(gens, "lex"), per_attempt)
        if res.verdict != "proper":
            continue
        for point in _solve_lex_triangular(res.basis, deadline):
            quad = _quad_from_values(point)
            if quad is not None and A.group_act(quad, a) == b:
                return quad
    return None


# ---------------------------------------------------------------------------
# the public decision procedures


def g0_conjugate(a: StateVector, b: StateVector,
                 limits: Limits = DEFAULT_LIMITS,
                 want_witness: bool = False) -> ConjugacyVerdict:
    """Are a and b in the same orbit of the local group (no permutations)?"""
    A = get_algebra()
    if a == b:
        return ConjugacyVerdict("yes", "prefilter", witness=SL2Quad.identity())
    siga = evaluate_signature(a)
    sigb = evaluate_signature(b)
    if siga.as_tuple() != sigb.as_tuple():
        return ConjugacyVerdict("no", "invariant_criterion",
                                detail="invariant signatures differ")
    if is_semisimple(a) and is_semisimple(b):
        verdict = ConjugacyVerdict("yes", "invariant_criterion",
                                   detail="equal invariants on semisimple states")
        if want_witness:
            verdict.witness = find_witness(a, b, limits)
        return verdict
    if prefilter_signature(a) != prefilter_signature(b):
        return ConjugacyVerdict("no", "prefilter",
                                detail="orbit-invariant fingerprints differ")
    # catalog route: classify both sides exactly when possible
    from . import classify as _classify
    ra = _classify.classify_state(a, limits)
    rb = _classify.classify_state(b, limits)
    if ra.exactness == "exact" and rb.exactness == "exact":
        same = ra.label.key() == rb.label.key() and \
            ra.label.parameters == rb.label.parameters
        verdict = ConjugacyVerdict("yes" if same else "no", "groebner",
                                   detail="classified against the catalog")
        if same and want_witness:
            verdict.witness = find_witness(a, b, limits)
        return verdict
    answer = direct_system_answer(a, b, limits)
    verdict = ConjugacyVerdict(answer, "groebner", detail="matrix-entry system")
    if answer == "yes" and want_witness:
        verdict.witness = find_witness(a, b, limits)
    return verdict


def s_conjugate(a: StateVector, b: StateVector,
                limits: Limits = DEFAULT_LIMITS,
                want_witness: bool = False) -> ConjugacyVerdict:
    """Conjugacy under qubit permutations combined with the local group."""
    A = get_algebra()
    saw_unknown = False
    for sigma in ALL_PERMUTATIONS:
        v = g0_conjugate(A.sym4_act(sigma, a), b, limits,
                         want_witness=want_witness)
        if v.answer == "yes":
            v.permutation = sigma
            return v
        if v.answer == "unknown":
            saw_unknown = True
    if saw_unknown:
        return ConjugacyVerdict("unknown", "groebner",
                                detail="some permutation branches exhausted resources")
    return ConjugacyVerdict("no", "groebner",
                            detail="all 24 permutation branches answered no")
