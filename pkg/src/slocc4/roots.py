"""Gaussian-rational roots of univariate polynomials over Q(i).

Degree <= 2 is handled completely by the quadratic formula with the exact
square-root test.  Higher degrees use the rational-root theorem in the UFD
Z[i]: candidate roots u/v need u dividing the trailing and v the leading
coefficient, so Gaussian-integer divisor enumeration (through factorisation
of the norm) finds every root that lies in Q(i).
"""

from __future__ import annotations

import math
import time
from typing import Dict, List, Optional, Tuple

from .poly import UniPoly, squarefree_part
from .scalars import ONE, ZERO, GaussianRational, gr, gr_sqrt

GInt = Tuple[int, int]


class FactorBudgetExceeded(Exception):
    pass


def _gi_mul(a: GInt, b: GInt) -> GInt:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_norm(a: GInt) -> int:
    return a[0] * a[0] + a[1] * a[1]


def _factor_int(n: int, deadline: Optional[float] = None) -> Dict[int, int]:
    """Prime factorisation by trial division plus Pollard rho."""
    out: Dict[int, int] = {}
    n = abs(n)
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 41
    while p * p <= n and p < 100000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        if deadline is not None and time.monotonic() > deadline:
            raise FactorBudgetExceeded
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, deadline)
        stack.append(d)
        stack.append(m // d)
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, deadline: Optional[float] = None) -> int:
    if n % 2 == 0:
        return 2
    import random
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise FactorBudgetExceeded
        c = random.randrange(1, n)
        x = y = random.randrange(2, n)
        d = 1
        count = 0
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
            count += 1
            if count % 4096 == 0 and deadline is not None \
                    and time.monotonic() > deadline:
                raise FactorBudgetExceeded
        if d != n:
            return d


def _sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _gaussian_prime_above(p: int) -> GInt:
    """A Gaussian prime dividing p, for p = 2 or p = 1 mod 4 (Cornacchia)."""
    if p == 2:
        return (1, 1)
    x = _sqrt_mod(p - 1, p)
    a, b = p, x
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    return (b, a % b)


def _gi_divmod(a: GInt, b: GInt) -> Tuple[GInt, GInt]:
    n = _gi_norm(b)
    nr = a[0] * b[0] + a[1] * b[1]
    ni = a[1] * b[0] - a[0] * b[1]
    qr = (2 * nr + n) // (2 * n)
    qi = (2 * ni + n) // (2 * n)
    q = (qr, qi)
    r = (a[0] - (qr * b[0] - qi * b[1]), a[1] - (qr * b[1] + qi * b[0]))
    return q, r


def _gi_divides(b: GInt, a: GInt) -> bool:
    return _gi_divmod(a, b)[1] == (0, 0)


def gaussian_divisors(z: GInt, cap: int = 200000,
                      time_budget: float = 20.0) -> Optional[List[GInt]]:
    """Divisors of z in Z[i] up to units; None past the cap or time budget."""
    if z == (0, 0):
        return None
    primes: List[Tuple[GInt, int]] = []
    try:
        norm_factors = _factor_int(_gi_norm(z),
                                   time.monotonic() + time_budget)
    except FactorBudgetExceeded:
        return None
    for p, e in sorted(norm_factors.items()):
        if p == 2:
            primes.append(((1, 1), e))
        elif p % 4 == 3:
            primes.append(((p, 0), e // 2))
        else:
            pi = _gaussian_prime_above(p)
            k = 0
            w = z
            while _gi_divides(pi, w):
                w = _gi_divmod(w, pi)[0]
                k += 1
            if k:
                primes.append((pi, k))
            bar = (pi[0], -pi[1])
            k = 0
            w = z
            while _gi_divides(bar, w):
                w = _gi_divmod(w, bar)[0]
                k += 1
            if k:
                primes.append((bar, k))
    divisors: List[GInt] = [(1, 0)]
    for pi, e in primes:
        new = []
        for d in divisors:
            cur = d
            for _ in range(e + 1):
                new.append(cur)
                cur = _gi_mul(cur, pi)
        divisors = new
        if len(divisors) > cap:
            return None
    # dedupe up to units
    seen = set()
    out = []
    for d in divisors:
        canon = min((d, (-d[1], d[0]), (-d[0], -d[1]), (d[1], -d[0])))
        if canon not in seen:
            seen.add(canon)
            out.append(d)
    return out


def _integerize(f: UniPoly) -> List[GInt]:
    den = 1
    for c in f.coeffs:
        for part in (c.re, c.im):
            d = int(part.denominator)
            den = den * d // math.gcd(den, d)
    return [(int(c.re * den), int(c.im * den)) for c in f.coeffs]


def gaussian_rational_roots(f: UniPoly, time_budget: float = 20.0
                            ) -> Optional[List[GaussianRational]]:
    """All roots of f inside Q(i); None when the divisor search overflows."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    roots: List[GaussianRational] = []
    coeffs = list(f.coeffs)
    k = 0
    while not coeffs[0]:
        coeffs.pop(0)
        k += 1
    if k:
        roots.append(ZERO)
    f = UniPoly(coeffs)
    if f.degree() == 0:
        return roots
    f = squarefree_part(f)
    if f.degree() == 1:
        roots.append(-f.coeffs[0] / f.coeffs[1])
        return roots
    if f.degree() == 2:
        c, b, a = f.coeffs
        disc = b * b - gr(4) * a * c
        sq = gr_sqrt(disc)
        if sq is not None:
            roots.append((-b + sq) / (gr(2) * a))
            if sq:
                roots.append((-b - sq) / (gr(2) * a))
        return roots
    ints = _integerize(f)
    d0 = gaussian_divisors(ints[0], time_budget=time_budget)
    dn = gaussian_divisors(ints[-1], time_budget=time_budget)
    if d0 is None or dn is None:
        return None
    units = (ONE, gr(0, 1), gr(-1), gr(0, -1))
    seen = set()
    for u in d0:
        nu = GaussianRational(u[0], u[1])
        for v in dn:
            dv = GaussianRational(v[0], v[1])
            base = nu / dv
            for un in units:
                cand = base * un
                if cand in seen:
                    continue
                seen.add(cand)
                if not f.evaluate(cand):
                    roots.append(cand)
    return roots
