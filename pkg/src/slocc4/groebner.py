"""Buchberger's algorithm over Q(i) with Gebauer-Möller pair elimination.

The hot reduction loop lives in a kernel module with two interchangeable
implementations: a compiled extension (``slocc4._gbcore``) and a pure-Python
twin (``slocc4._gbpure``).  The compiled one is preferred; set the
environment variable ``SLOCC4_PURE_PY=1`` to force the fallback.

Resource limits are first-class: every run can bound the number of pairs,
the lcm degree, and wall-clock time.  A run that exhausts its limits reports
``resource_exhausted`` and never returns a wrong basis.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import MultiPoly, PolyRing
from .scalars import GaussianRational

if os.environ.get("SLOCC4_PURE_PY"):
    from . import _gbpure as kernel
else:
    try:
        from . import _gbcore as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _gbpure as kernel

KERNEL_IMPLEMENTATION = kernel.IMPLEMENTATION


@dataclass(frozen=True)
class Limits:
    """Resource budget for one Buchberger run."""

    max_pairs: Optional[int] = None
    max_degree: int = 12
    time_budget: float = 60.0

    def loosened(self, *, max_degree=None, time_budget=None) -> "Limits":
        return Limits(self.max_pairs,
                      max_degree if max_degree is not None else self.max_degree,
                      time_budget if time_budget is not None else self.time_budget)


DEFAULT_LIMITS = Limits()


class Ideal:
    """A list of generators together with the monomial order to compute in."""

    def __init__(self, generators: Sequence[MultiPoly], order: str = "degrevlex",
                 block: int = 0):
        gens = [g for g in generators if not g.is_zero()]
        if not gens and not generators:
            raise ValueError("ideal needs at least one generator")
        base = generators[0].ring
        for g in generators:
            if g.ring.nvars != base.nvars:
                raise ValueError("generators live in different rings")
        self.ring = PolyRing(base.nvars, order, block, names=base.names)
        self.generators = [MultiPoly(self.ring, g.terms) for g in gens]
        self.order = order
        self.block = block

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators, {self.ring})"


@dataclass
class GBResult:
    """Outcome of a Buchberger run."""

    verdict: str                       # trivial | proper | resource_exhausted
    basis: Optional[List[MultiPoly]]   # reduced basis when the run completed
    stats: Dict[str, object] = field(default_factory=dict)

    @property
    def completed(self) -> bool:
        return self.verdict in ("trivial", "proper")

    def trace(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        for k in sorted(self.stats):
            lines.append(f"{k}: {self.stats[k]}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# conversions between MultiPoly and kernel representation


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _to_kernel(p: MultiPoly, spec):
    pairs = []
    common = 1
    for m, c in p.terms.items():
        dre, dim = int(c.re.denominator), int(c.im.denominator)
        d = dre * dim // _gcd_int(dre, dim)
        pairs.append((kernel.pack(m, spec), c, d))
        common = common * d // _gcd_int(common, d)
    out = [(pk, int(c.re * common), int(c.im * common)) for pk, c, d in pairs]
    return kernel.from_pairs(out, spec)


def _from_kernel(terms, ring: PolyRing, spec, scale=None) -> MultiPoly:
    out = {}
    if scale is None:
        for _, packed, cr, ci in terms:
            out[kernel.unpack(packed, spec)] = GaussianRational(cr, ci)
    else:
        s = GaussianRational(scale[0], scale[1])
        for _, packed, cr, ci in terms:
            out[kernel.unpack(packed, spec)] = GaussianRational(cr, ci) / s
    return MultiPoly(ring, out)


# ---------------------------------------------------------------------------
# the Buchberger loop


class _Run:
    def __init__(self, ideal: Ideal, limits: Limits):
        self.ring = ideal.ring
        self.spec = kernel.make_spec(self.ring.nvars, ideal.order, ideal.block)
        self.limits = limits
        self.deadline = time.monotonic() + limits.time_budget
        self.basis: List[list] = []          # kernel polynomials
        self.lead: List[Tuple[int, int]] = []  # (packed, degree) per element
        self.alive: List[bool] = []
        self.pairs: Dict[Tuple[int, int], Tuple[int, int]] = {}  # (i,j)->(lcm,deg)
        self.deferred = 0
        self.pairs_processed = 0
        self.reductions_to_zero = 0
        self.max_degree_seen = 0
        self.trivial = False

    def timed_out(self) -> bool:
        return time.monotonic() > self.deadline

    def _pair_lcm(self, i: int, j: int) -> Tuple[int, int]:
        lcm = kernel.mono_lcm(self.lead[i][0], self.lead[j][0], self.spec)
        return lcm, kernel.pdeg(lcm, self.spec)

    def add_poly(self, p) -> None:
        """Gebauer-Möller update with the new basis element p."""
        t = len(self.basis)
        lp = p[0][1]
        ldeg = kernel.pdeg(lp, self.spec)
        spec = self.spec
        new_pairs: Dict[int, Tuple[int, int]] = {}
        for i in range(t):
            if self.alive[i]:
                lcm = kernel.mono_lcm(self.lead[i][0], lp, spec)
                new_pairs[i] = (lcm, kernel.pdeg(lcm, spec))
        # criterion M: drop (i,t) when another new pair's lcm properly divides
        drop = set()
        items = list(new_pairs.items())
        for a, (lcm_a, _) in items:
            for b, (lcm_b, _) in items:
                if a != b and lcm_a != lcm_b and kernel.divides(lcm_b, lcm_a, spec):
                    drop.add(a)
                    break
        # criterion F: one representative per lcm class, preferring a pair
        # with disjoint leading monomials (then criterion B removes the class)
        classes: Dict[int, List[int]] = {}
        for a, (lcm_a, _) in items:
            if a not in drop:
                classes.setdefault(lcm_a, []).append(a)
        for lcm_a, members in classes.items():
            coprime = [a for a in members if lcm_a == self.lead[a][0] + lp]
            if coprime:
                drop.update(members)  # covered by Buchberger's first criterion
            else:
                drop.update(members[1:])
        # prune old pairs made redundant by the new lead
        for (i, j), (lcm_ij, _) in list(self.pairs.items()):
            if kernel.divides(lp, lcm_ij, spec):
                lcm_it = kernel.mono_lcm(self.lead[i][0], lp, spec)
                lcm_jt = kernel.mono_lcm(self.lead[j][0], lp, spec)
                if lcm_it != lcm_ij and lcm_jt != lcm_ij:
                    del self.pairs[(i, j)]
        # retire basis elements whose lead the new lead divides
        for i in range(t):
            if self.alive[i] and kernel.divides(lp, self.lead[i][0], spec):
                self.alive[i] = False
        self.basis.append(p)
        self.lead.append((lp, ldeg))
        self.alive.append(True)
        for a, pay in new_pairs.items():
            if a not in drop:
                self.pairs[(a, len(self.basis) - 1)] = pay

    def reducers(self) -> List[list]:
        idx = [i for i in range(len(self.basis)) if self.alive[i]]
        idx.sort(key=lambda i: (self.lead[i][1], -self.basis[i][0][0]))
        return [self.basis[i] for i in idx]

    def run(self, generators) -> str:
        spec = self.spec
        for g in generators:
            kp = _to_kernel(g, spec)
            if not kp:
                continue
            if kp[0][1] == 0:  # a nonzero constant generator
                self.trivial = True
                return "trivial"
            try:
                kp = kernel.reduce_full(kp, self.reducers(), spec,
                                        deadline=self.deadline)
            except TimeoutError:
                return "resource_exhausted"
            if kp:
                if kp[0][1] == 0:
                    self.trivial = True
                    return "trivial"
                self.add_poly(kp)
        if not self.basis:
            return "proper"  # the zero ideal
        while self.pairs:
            if self.timed_out():
                return "resource_exhausted"
            if self.limits.max_pairs is not None and \
                    self.pairs_processed >= self.limits.max_pairs:
                return "resource_exhausted"
            key = min(self.pairs.items(),
                      key=lambda kv: (kv[1][1], kv[1][0], kv[0]))
            (i, j), (lcm, deg) = key
            del self.pairs[(i, j)]
            if deg > self.limits.max_degree:
                self.deferred += 1
                continue
            self.pairs_processed += 1
            self.max_degree_seen = max(self.max_degree_seen, deg)
            sp = kernel.s_poly(self.basis[i], self.basis[j], spec)
            if not sp:
                self.reductions_to_zero += 1
                continue
            try:
                red = kernel.reduce_full(sp, self.reducers(), spec,
                                         deadline=self.deadline)
            except TimeoutError:
                return "resource_exhausted"
            if not red:
                self.reductions_to_zero += 1
                continue
            if red[0][1] == 0:
                self.trivial = True
                return "trivial"
            self.add_poly(red)
        if self.deferred:
            return "resource_exhausted"
        return "proper"

    def reduced_basis(self) -> List[list]:
        """Inter-reduce the surviving elements (tails fully reduced)."""
        live = [i for i in range(len(self.basis)) if self.alive[i]]
        keep = []
        for i in live:
            li = self.lead[i][0]
            redundant = any(
                (self.lead[j][0] != li and kernel.divides(self.lead[j][0], li, self.spec))
                or (self.lead[j][0] == li and j < i)
                for j in live if j != i)
            if not redundant:
                keep.append(i)
        polys = [self.basis[i] for i in keep]
        changed = True
        while changed:
            changed = False
            for k in range(len(polys)):
                others = [polys[m] for m in range(len(polys)) if m != k]
                red = kernel.reduce_full(polys[k], others, self.spec,
                                         deadline=self.deadline)
                if red != polys[k]:
                    changed = True
                    if not red:
                        polys.pop(k)
                        break
                    polys[k] = red
        polys.sort(key=lambda p: p[0][0])
        return polys


def buchberger(ideal: Ideal, limits: Limits = DEFAULT_LIMITS) -> GBResult:
    """Reduced Gröbner basis of the ideal, within the given limits."""
    t0 = time.monotonic()
    run = _Run(ideal, limits)
    verdict = run.run(ideal.generators)
    stats = {
        "pairs_processed": run.pairs_processed,
        "reductions_to_zero": run.reductions_to_zero,
        "max_degree_reached": run.max_degree_seen,
        "deferred_pairs": run.deferred,
        "elapsed_s": round(time.monotonic() - t0, 6),
        "kernel": KERNEL_IMPLEMENTATION,
    }
    if verdict == "trivial":
        one = MultiPoly.const(ideal.ring, 1)
        return GBResult("trivial", [one], stats)
    if verdict == "resource_exhausted":
        return GBResult("resource_exhausted", None, stats)
    try:
        polys = run.reduced_basis()
    except TimeoutError:
        return GBResult("resource_exhausted", None, stats)
    basis = []
    for kp in polys:
        p = _from_kernel(kp, ideal.ring, run.spec)
        basis.append(p * (GaussianRational(1) / p.leading_coefficient()))
    if len(basis) == 1 and basis[0].is_constant() and not basis[0].is_zero():
        return GBResult("trivial", [MultiPoly.const(ideal.ring, 1)], stats)
    return GBResult("proper", basis, stats)


def contains_one(ideal: Ideal, limits: Limits = DEFAULT_LIMITS) -> str:
    """'yes' iff 1 lies in the ideal, 'no' iff it provably does not,
    'unknown' on resource exhaustion."""
    res = buchberger(ideal, limits)
    if res.verdict == "trivial":
        return "yes"
    if res.verdict == "proper":
        return "no"
    return "unknown"


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of p on division by the given polynomials.

    No term of the result is divisible by any leading monomial of the basis.
    """
    gens = [g for g in basis if not g.is_zero()]
    if p.is_zero() or not gens:
        return p
    ring = p.ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("normal_form operands share no ring")
    spec = kernel.make_spec(ring.nvars, ring.order, ring.block)
    kp = _to_kernel(p, spec)
    reducers = [_to_kernel(g, spec) for g in gens]
    terms, mr, mi = kernel.reduce_full(kp, reducers, spec, want_scale=True)
    # undo the pseudo-reduction multiplier and the input integerisation
    kp_scale = _integer_scale(p, spec)
    scale = (GaussianRational(mr, mi) * kp_scale)
    out = {}
    for _, packed, cr, ci in terms:
        out[kernel.unpack(packed, spec)] = GaussianRational(cr, ci) / scale
    return MultiPoly(ring, out)


def _integer_scale(p: MultiPoly, spec) -> GaussianRational:
    """The overall factor u with _to_kernel(p) == u * p, read off the leads."""
    kp = _to_kernel(p, spec)
    mono = kernel.unpack(kp[0][1], spec)
    return GaussianRational(kp[0][2], kp[0][3]) / p.terms[mono]


def spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """S-polynomial (monic normalisation), for the post-hoc Buchberger test."""
    if f.ring != g.ring:
        raise ValueError("spoly operands share no ring")
    ring = f.ring
    spec = kernel.make_spec(ring.nvars, ring.order, ring.block)
    kf, kg = _to_kernel(f, spec), _to_kernel(g, spec)
    return _from_kernel(kernel.s_poly(kf, kg, spec), ring, spec)


# ---------------------------------------------------------------------------
# modular predictor (advisory only; exact answers are always recomputed)

MOD_PRIME = 998244353  # 1 mod 4, so -1 is a square and Q(i) maps into F_p
_SQRT_M1 = pow(3, (MOD_PRIME - 1) // 4, MOD_PRIME)
if (_SQRT_M1 * _SQRT_M1 + 1) % MOD_PRIME != 0:  # pragma: no cover
    raise AssertionError("bad modular setup")


def _to_modular(p: MultiPoly, spec) -> Optional[List[Tuple[int, int]]]:
    """Map a polynomial into F_p[x]; None when a denominator vanishes mod p."""
    out = {}
    for m, c in p.terms.items():
        dre, dim = int(c.re.denominator), int(c.im.denominator)
        if dre % MOD_PRIME == 0 or dim % MOD_PRIME == 0:
            return None
        v = (int(c.re.numerator) * pow(dre, -1, MOD_PRIME)
             + _SQRT_M1 * int(c.im.numerator) * pow(dim, -1, MOD_PRIME)) % MOD_PRIME
        packed = kernel.pack(m, spec)
        out[packed] = (out.get(packed, 0) + v) % MOD_PRIME
    terms = [(kernel.key_of(pk, spec), pk, c) for pk, c in out.items() if c]
    terms.sort(reverse=True)
    return terms


def _mod_reduce(p, reducers, spec):
    work = dict((pk, c) for _, pk, c in p)
    import heapq as _hq
    heap = [-k for k, _, _ in p]
    _hq.heapify(heap)
    k2p = {k: pk for k, pk, _ in p}
    out = []
    leads = [(g[0][1], g[0][2], g) for g in reducers if g]
    while heap:
        key = -_hq.heappop(heap)
        pk = k2p.get(key)
        if pk is None:
            continue
        c = work.get(pk)
        if not c:
            work.pop(pk, None)
            continue
        hit = None
        for lp, lc, g in leads:
            if kernel.divides(lp, pk, spec):
                hit = (lp, lc, g)
                break
        if hit is None:
            del work[pk]
            out.append((key, pk, c))
            continue
        lp, lc, g = hit
        factor = c * pow(lc, -1, MOD_PRIME) % MOD_PRIME
        shift = pk - lp
        gk = g[0][0]
        for tkey, tpk, tc in g:
            npk = tpk + shift
            nkey = key + tkey - gk
            prev = work.get(npk)
            if prev is None:
                work[npk] = (-factor * tc) % MOD_PRIME
                k2p[nkey] = npk
                _hq.heappush(heap, -nkey)
            else:
                work[npk] = (prev - factor * tc) % MOD_PRIME
        work.pop(pk, None)
    return out


def modular_triviality_hint(ideal: Ideal, time_budget: float = 5.0) -> Optional[bool]:
    """Fast Buchberger run mod p; True/False predicts contains_one, None = no call."""
    spec = kernel.make_spec(ideal.ring.nvars, ideal.order, ideal.block)
    gens = []
    for g in ideal.generators:
        mg = _to_modular(g, spec)
        if mg is None:
            return None
        if mg:
            gens.append(mg)
    basis: List[list] = []
    pairs = []
    deadline = time.monotonic() + time_budget

    def add(p):
        idx = len(basis)
        for i in range(idx):
            pairs.append((i, idx))
        basis.append(p)

    for g in gens:
        if g[0][1] == 0:
            return True
        add(g)
    while pairs:
        if time.monotonic() > deadline:
            return None
        best = min(range(len(pairs)), key=lambda t: kernel.pdeg(
            kernel.mono_lcm(basis[pairs[t][0]][0][1], basis[pairs[t][1]][0][1], spec),
            spec))
        i, j = pairs.pop(best)
        li, lj = basis[i][0][1], basis[j][0][1]
        lcm = kernel.mono_lcm(li, lj, spec)
        if lcm == li + lj:
            continue
        lk = kernel.key_of(lcm, spec)
        sf, sg = lcm - li, lcm - lj
        ci = pow(basis[i][0][2], -1, MOD_PRIME)
        cj = pow(basis[j][0][2], -1, MOD_PRIME)
        acc = {}
        for key, pk, c in basis[i]:
            acc[pk + sf] = (acc.get(pk + sf, 0) + c * ci) % MOD_PRIME
        for key, pk, c in basis[j]:
            acc[pk + sg] = (acc.get(pk + sg, 0) - c * cj) % MOD_PRIME
        terms = [(kernel.key_of(pk, spec), pk, c) for pk, c in acc.items() if c]
        terms.sort(reverse=True)
        if not terms:
            continue
        red = _mod_reduce(terms, basis, spec)
        if not red:
            continue
        if red[0][1] == 0:
            return True
        add(red)
    return False
