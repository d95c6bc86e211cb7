"""Sparse multivariate and dense univariate polynomials over Q(i).

Monomials are exponent tuples (one entry per ring variable).  The monomial
order is a property of the ring, so polynomials from different orders can
never be mixed silently.  Supported orders:

    degrevlex  - graded reverse lexicographic (the Buchberger default)
    lex        - lexicographic, variable 0 largest
    block(k)   - elimination order: degrevlex on the first k variables,
                 ties broken by degrevlex on the rest (eliminates x_0..x_{k-1})
"""

from __future__ import annotations

import re as _re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import ONE, ZERO, GaussianRational, Rat, _coerce

Monomial = Tuple[int, ...]


class RingMismatch(ValueError):
    """Operands live in different polynomial rings."""


class PolyRing:
    """A polynomial ring over Q(i): variable count, monomial order, names."""

    __slots__ = ("nvars", "order", "block", "names", "_key_cache")

    def __init__(self, nvars: int, order: str = "degrevlex", block: int = 0,
                 names: Optional[Sequence[str]] = None):
        if order not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {order!r}")
        if order == "block" and not (0 < block < nvars):
            raise ValueError("block order needs 0 < k < nvars")
        self.nvars = nvars
        self.order = order
        self.block = block if order == "block" else 0
        self.names = tuple(names) if names else tuple(f"x{i+1}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("wrong number of variable names")
        self._key_cache: Dict[Monomial, tuple] = {}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.nvars == other.nvars
                and self.order == other.order and self.block == other.block)

    def __hash__(self):
        return hash((self.nvars, self.order, self.block))

    def __repr__(self):
        tag = self.order if self.order != "block" else f"block({self.block})"
        return f"PolyRing({self.nvars}, {tag})"

    def key(self, m: Monomial) -> tuple:
        """Sort key: ascending key order == ascending monomial order."""
        k = self._key_cache.get(m)
        if k is None:
            k = self._key(m)
            if len(self._key_cache) < 200000:
                self._key_cache[m] = k
        return k

    def _key(self, m: Monomial) -> tuple:
        if self.order == "lex":
            return m
        if self.order == "degrevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        b = self.block
        head, tail = m[:b], m[b:]
        return (sum(head), tuple(-e for e in reversed(head)),
                sum(tail), tuple(-e for e in reversed(tail)))

    def cmp(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def zero_mono(self) -> Monomial:
        return (0,) * self.nvars


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


class MultiPoly:
    """Immutable sparse polynomial; no stored coefficient is zero."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, GaussianRational]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._sorted: Optional[List[Monomial]] = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ring: PolyRing) -> "MultiPoly":
        return MultiPoly(ring, {})

    @staticmethod
    def const(ring: PolyRing, c) -> "MultiPoly":
        c = _coerce(c)
        return MultiPoly(ring, {ring.zero_mono(): c} if c else {})

    @staticmethod
    def var(ring: PolyRing, idx: int, power: int = 1) -> "MultiPoly":
        e = [0] * ring.nvars
        e[idx] = power
        return MultiPoly(ring, {tuple(e): ONE})

    @staticmethod
    def from_terms(ring: PolyRing, items: Iterable[Tuple[Monomial, GaussianRational]]
                   ) -> "MultiPoly":
        acc: Dict[Monomial, GaussianRational] = {}
        for m, c in items:
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        return MultiPoly(ring, acc)

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and next(iter(self.terms)) == self.ring.zero_mono())

    def sorted_monomials(self) -> List[Monomial]:
        """Monomials in descending ring order."""
        if self._sorted is None:
            self._sorted = sorted(self.terms, key=self.ring.key, reverse=True)
        return self._sorted

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_monomials()[0]

    def leading_coefficient(self) -> GaussianRational:
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        return MultiPoly(self.ring, acc)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            prev = acc.get(m)
            acc[m] = -c if prev is None else prev - c
        return MultiPoly(self.ring, acc)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = _coerce(other)
            if not c:
                return MultiPoly.zero(self.ring)
            return MultiPoly(self.ring, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        acc: Dict[Monomial, GaussianRational] = {}
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = mono_mul(m1, m2)
                p = c1 * c2
                prev = acc.get(m)
                acc[m] = p if prev is None else prev + p
        return MultiPoly(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale_monomial(self, m: Monomial, c: GaussianRational) -> "MultiPoly":
        """self * c * x^m."""
        if not c:
            return MultiPoly.zero(self.ring)
        return MultiPoly(self.ring, {mono_mul(m, m2): c * c2
                                     for m2, c2 in self.terms.items()})

    # -- evaluation and calculus ----------------------------------------------

    def evaluate(self, point: Sequence[GaussianRational]) -> GaussianRational:
        if len(point) != self.ring.nvars:
            raise ValueError("evaluation point has wrong length")
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for e, x in zip(m, point):
                if e:
                    v = v * (x ** e)
            total = total + v
        return total

    def partial_derivative(self, k: int) -> "MultiPoly":
        acc: Dict[Monomial, GaussianRational] = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                m2 = m[:k] + (e - 1,) + m[k + 1:]
                add = c * e
                prev = acc.get(m2)
                acc[m2] = add if prev is None else prev + add
        return MultiPoly(self.ring, acc)

    def substitute(self, target: PolyRing, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Ring map x_k -> images[k]; returns a polynomial in target."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        total = MultiPoly.zero(target)
        pow_cache: Dict[Tuple[int, int], MultiPoly] = {}
        for m, c in self.terms.items():
            prod = MultiPoly.const(target, c)
            for k, e in enumerate(m):
                if e:
                    key = (k, e)
                    p = pow_cache.get(key)
                    if p is None:
                        p = images[k] ** e
                        pow_cache[key] = p
                    prod = prod * p
            total = total + prod
        return total

    # -- display ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.sorted_monomials():
            c = self.terms[m]
            factors = [f"{self.ring.names[i]}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(m) if e]
            body = "*".join(factors)
            cs = str(c)
            if body:
                if cs == "1":
                    term = body
                elif cs == "-1":
                    term = "-" + body
                elif ("+" in cs[1:]) or ("-" in cs[1:]) or cs.endswith("i"):
                    term = f"({cs})*{body}"
                else:
                    term = f"{cs}*{body}"
            else:
                term = cs if not (("+" in cs[1:]) or ("-" in cs[1:])) else f"({cs})"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += ("-" + t[1:]) if t.startswith("-") else ("+" + t)
        return out

    __repr__ = __str__


_TERM_RE = _re.compile(r"\s*([+-])?\s*([^+-]+(?:\^[0-9]+)?)")


def parse_poly(ring: PolyRing, text: str) -> MultiPoly:
    """Parse expressions like "2*l1^2 - l1*l2 + 3" in the ring's names.

    Coefficients may be integers, integer fractions a/b, or 'i' factors.
    Intended for embedded table data and tests, not end-user input.
    """
    name_to_idx = {n: k for k, n in enumerate(ring.names)}
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    terms: List[Tuple[Monomial, GaussianRational]] = []
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while pos <= len(s) - 1:
        nxt_plus = s.find("+", pos)
        nxt_minus = s.find("-", pos)
        cands = [k for k in (nxt_plus, nxt_minus) if k != -1]
        end = min(cands) if cands else len(s)
        chunk = s[pos:end]
        coeff = GaussianRational(1)
        expo = [0] * ring.nvars
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"bad factor in {text!r}")
            if "^" in factor:
                base, _, p = factor.partition("^")
                power = int(p)
            else:
                base, power = factor, 1
            if base in name_to_idx:
                expo[name_to_idx[base]] += power
            elif base == "i":
                coeff = coeff * (GaussianRational(0, 1) ** power)
            elif _re.fullmatch(r"\d+(/\d+)?", base):
                if "/" in base:
                    n, d = base.split("/")
                    coeff = coeff * GaussianRational(Rat(int(n), int(d))) ** power
                else:
                    coeff = coeff * GaussianRational(int(base)) ** power
            else:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
        terms.append((tuple(expo), coeff * sign))
        if end == len(s):
            break
        sign = -1 if s[end] == "-" else 1
        pos = end + 1
    return MultiPoly.from_terms(ring, terms)


# ---------------------------------------------------------------------------
# dense univariate polynomials


class UniPoly:
    """Dense univariate polynomial over Q(i), low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[GaussianRational]):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly((_coerce(c),))

    @staticmethod
    def x(power: int = 1) -> "UniPoly":
        return UniPoly((ZERO,) * power + (ONE,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] - other[k] for k in range(n)])

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = _coerce(other)
            return UniPoly([a * c for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(other.coeffs):
                if b:
                    out[j + k] = out[j + k] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(()), self
        quo = [ZERO] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree()]
            if top:
                q = top / lead
                quo[k] = q
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * b
        return UniPoly(quo), UniPoly(rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly([c / lead for c in self.coeffs])

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def evaluate(self, x: GaussianRational) -> GaussianRational:
        total = ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*T")
            else:
                parts.append(f"({c})*T^{k}")
        return " + ".join(parts)

    __repr__ = __str__


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q(i)."""
    while not b.is_zero():
        r = a % b
        # keeping remainders monic contains coefficient growth in the chain
        a, b = b, r.monic()
    return a.monic()


def uni_ext_gcd(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly, UniPoly]:
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1), UniPoly.zero()
    t0, t1 = UniPoly.zero(), UniPoly.const(1)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading()
    inv = GaussianRational(1) / lead
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'), monic: same roots as f, each with multiplicity one."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = uni_gcd(f, f.derivative())
    if g.degree() <= 0:
        return f.monic()
    q, r = f.divmod(g)
    if not r.is_zero():
        raise ArithmeticError("gcd did not divide its polynomial")
    return q.monic()
