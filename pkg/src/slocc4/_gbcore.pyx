# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Gröbner kernel: the hot reduction loop of the pure twin
``slocc4._gbpure``, with typed control flow.  Both implementations expose
the same API and produce identical results; see the module docstring of the
pure twin for the representation."""

import heapq
import time as _time

FIELD = 16
HALF = 1 << (FIELD - 1)

ORDER_LEX = 0
ORDER_DEGREVLEX = 1
ORDER_BLOCK = 2

_ORDER_CODES = {"lex": ORDER_LEX, "degrevlex": ORDER_DEGREVLEX, "block": ORDER_BLOCK}

IMPLEMENTATION = "cython"


def make_spec(nvars, order, block=0):
    """Precompute packing constants for a ring; returns an opaque tuple."""
    code = _ORDER_CODES[order]
    guard = 0
    for j in range(nvars):
        guard |= HALF << (FIELD * j)
    if code == ORDER_LEX:
        kconst = 0
    elif code == ORDER_DEGREVLEX:
        kconst = 1 << (FIELD * nvars)
    else:
        m1 = 1 << (FIELD * block)
        m2 = 1 << (FIELD * (nvars - block))
        shift2 = FIELD * (nvars - block) + 2 * FIELD
        kconst = (m1 << shift2) + m2
    return (nvars, code, block, guard, kconst)


def pack(mono, spec):
    acc = 0
    for e in mono:
        if e >= HALF:
            raise OverflowError("exponent too large for packed monomial")
        acc = (acc << FIELD) | e
    return acc


def unpack(packed, spec):
    n = spec[0]
    mask = (1 << FIELD) - 1
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = packed & mask
        packed >>= FIELD
    return tuple(out)


def pdeg(packed, spec):
    mask = (1 << FIELD) - 1
    total = 0
    while packed:
        total += packed & mask
        packed >>= FIELD
    return total


def _revpack(fields):
    acc = 0
    for e in reversed(fields):
        acc = (acc << FIELD) | e
    return acc


def key_of(packed, spec):
    """Order key of a packed monomial (bigger key = bigger monomial)."""
    n, code = spec[0], spec[1]
    if code == ORDER_LEX:
        return packed
    fields = unpack(packed, spec)
    if code == ORDER_DEGREVLEX:
        m = 1 << (FIELD * n)
        return sum(fields) * (m << FIELD) + (m - _revpack(fields))
    b = spec[2]
    head, tail = fields[:b], fields[b:]
    m1 = 1 << (FIELD * b)
    m2 = 1 << (FIELD * (n - b))
    shift2 = FIELD * (n - b) + 2 * FIELD
    k1 = sum(head) * (m1 << FIELD) + (m1 - _revpack(head))
    k2 = sum(tail) * (m2 << FIELD) + (m2 - _revpack(tail))
    return (k1 << shift2) + k2


def divides(a, b, spec):
    """True when monomial a divides monomial b (packed)."""
    guard = spec[3]
    return ((b | guard) - a) & guard == guard


def mono_lcm(a, b, spec):
    guard = spec[3]
    d = (a | guard) - b
    intact = d & guard
    fm = (intact >> (FIELD - 1)) * ((1 << FIELD) - 1)
    return b + ((d & fm) - (intact & fm))


# ---------------------------------------------------------------------------
# Gaussian-integer coefficient helpers


def gi_gcd(ar, ai, br, bi):
    """Euclidean gcd in Z[i] (up to units)."""
    while br or bi:
        n = br * br + bi * bi
        nr = ar * br + ai * bi
        ni = ai * br - ar * bi
        qr = (2 * nr + n) // (2 * n)
        qi = (2 * ni + n) // (2 * n)
        rr = ar - (qr * br - qi * bi)
        ri = ai - (qr * bi + qi * br)
        ar, ai, br, bi = br, bi, rr, ri
    return ar, ai


def gi_div_exact(ar, ai, br, bi):
    """(ar+ai*i)/(br+bi*i), which must be exact."""
    n = br * br + bi * bi
    rr, rem1 = divmod(ar * br + ai * bi, n)
    ri, rem2 = divmod(ai * br - ar * bi, n)
    if rem1 or rem2:
        raise ArithmeticError("inexact Gaussian-integer division")
    return rr, ri


def _canon_unit(ar, ai):
    """Power k in 0..3 such that (ar+ai*i) * i^k has re > 0, im >= 0."""
    k = 0
    while not (ar > 0 and ai >= 0):
        ar, ai = -ai, ar
        k += 1
        if k > 3:
            raise ArithmeticError("unit normalisation of zero coefficient")
    return k


_UNIT = ((1, 0), (0, 1), (-1, 0), (0, -1))


def content_normalize(terms):
    """Divide by the Z[i] content and make the leading coefficient canonical."""
    if not terms:
        return terms
    gr_, gi_ = 0, 0
    for _, _, cr, ci in terms:
        gr_, gi_ = gi_gcd(gr_, gi_, cr, ci)
        if gr_ * gr_ + gi_ * gi_ == 1:
            break
    lr, li = terms[0][2], terms[0][3]
    lr, li = gi_div_exact(lr, li, gr_, gi_)
    k = _canon_unit(lr, li)
    ur, ui = _UNIT[k]
    out = []
    for key, packed, cr, ci in terms:
        cr, ci = gi_div_exact(cr, ci, gr_, gi_)
        out.append((key, packed, cr * ur - ci * ui, cr * ui + ci * ur))
    return out


def from_pairs(pairs, spec):
    """Build a kernel polynomial from (packed, cre, cim) triples."""
    acc = {}
    for packed, cr, ci in pairs:
        prev = acc.get(packed)
        if prev is None:
            acc[packed] = (cr, ci)
        else:
            acc[packed] = (prev[0] + cr, prev[1] + ci)
    terms = [(key_of(p, spec), p, cr, ci) for p, (cr, ci) in acc.items()
             if cr or ci]
    terms.sort(reverse=True)
    return content_normalize(terms)


def s_poly(f, g, spec):
    """Content-normalized S-polynomial of two kernel polynomials."""
    kconst = spec[4]
    fk, fp, fr, fi = f[0]
    gk, gp, gr_, gi_ = g[0]
    lcm = mono_lcm(fp, gp, spec)
    lcmk = key_of(lcm, spec)
    cr, ci = gi_gcd(fr, fi, gr_, gi_)
    # multipliers: f * (g_lead / gcd) on monomial lcm/fp, minus symmetric term
    mfr, mfi = gi_div_exact(gr_, gi_, cr, ci)
    mgr, mgi = gi_div_exact(fr, fi, cr, ci)
    sf, sfk = lcm - fp, lcmk - fk
    sg, sgk = lcm - gp, lcmk - gk
    acc = {}
    for key, packed, ar, ai in f:
        p = packed + sf
        acc[p] = (key + sfk, ar * mfr - ai * mfi, ar * mfi + ai * mfr)
    for key, packed, ar, ai in g:
        p = packed + sg
        vr = ar * mgr - ai * mgi
        vi = ar * mgi + ai * mgr
        prev = acc.get(p)
        if prev is None:
            acc[p] = (key + sgk, -vr, -vi)
        else:
            acc[p] = (prev[0], prev[1] - vr, prev[2] - vi)
    terms = [(k, p, cr, ci) for p, (k, cr, ci) in acc.items() if cr or ci]
    terms.sort(reverse=True)
    return content_normalize(terms)


def reduce_full(p, reducers, spec, want_scale=False, deadline=None):
    """Full normal form of p modulo the reducers (pseudo-reduction).

    Every term of the result is divisible by no reducer leading monomial.
    Returns the content-normalized remainder; with ``want_scale`` the raw
    remainder is returned together with the Gaussian-integer multiplier
    (mr, mi) applied to p, so that ``mult*p = sum(q_i g_i) + remainder``.
    Raises TimeoutError when a deadline (time.monotonic clock) passes.
    """
    if not p:
        return (list(p), 1, 0) if want_scale else list(p)
    leads = [(g[0][1], g[0][2], g[0][3], g) for g in reducers if g]
    work = {}
    keymap = {}
    heap = []
    for key, packed, cr, ci in p:
        work[packed] = (cr, ci)
        keymap[packed] = key
        heap.append(-key)
    heapq.heapify(heap)
    key_to_packed = {keymap[pk]: pk for pk in keymap}
    result = []
    events = []
    mr, mi = 1, 0
    steps = 0
    while heap:
        steps += 1
        if deadline is not None and steps % 128 == 0 \
                and _time.monotonic() > deadline:
            raise TimeoutError("reduction deadline exceeded")
        key = -heapq.heappop(heap)
        packed = key_to_packed.get(key)
        if packed is None:
            continue
        coeff = work.get(packed)
        if coeff is None or (coeff[0] == 0 and coeff[1] == 0):
            work.pop(packed, None)
            continue
        hit = None
        for lp, lr, li, g in leads:
            if divides(lp, packed, spec):
                hit = (lp, lr, li, g)
                break
        if hit is None:
            del work[packed]
            result.append([key, packed, coeff[0], coeff[1], len(events)])
            continue
        lp, lr, li, g = hit
        gcr, gci = gi_gcd(coeff[0], coeff[1], lr, li)
        ar, ai = gi_div_exact(lr, li, gcr, gci)      # multiply work by this
        br, bi = gi_div_exact(coeff[0], coeff[1], gcr, gci)  # times reducer
        if ar != 1 or ai != 0:
            for pk, (cr, ci) in work.items():
                work[pk] = (cr * ar - ci * ai, cr * ai + ci * ar)
            events.append((ar, ai))
            mr, mi = mr * ar - mi * ai, mr * ai + mi * ar
        shift = packed - lp
        gk = g[0][0]
        for tkey, tpacked, tr, ti in g:
            npk = tpacked + shift
            nkey = key + tkey - gk
            vr = br * tr - bi * ti
            vi = br * ti + bi * tr
            prev = work.get(npk)
            if prev is None:
                work[npk] = (-vr, -vi)
                keymap[npk] = nkey
                key_to_packed[nkey] = npk
                heapq.heappush(heap, -nkey)
            else:
                work[npk] = (prev[0] - vr, prev[1] - vi)
        # the head term cancels exactly
        top = work.get(packed)
        if top is not None and top[0] == 0 and top[1] == 0:
            del work[packed]
    if events:
        # lazily apply the pending multipliers to already-final terms
        suffix = [(1, 0)] * (len(events) + 1)
        for j in range(len(events) - 1, -1, -1):
            er, ei = events[j]
            sr, si = suffix[j + 1]
            suffix[j] = (er * sr - ei * si, er * si + ei * sr)
        for item in result:
            sr, si = suffix[item[4]]
            cr, ci = item[2], item[3]
            item[2], item[3] = cr * sr - ci * si, cr * si + ci * sr
    # a monomial finalized early can be re-created by later tail shifts
    acc = {}
    for key, packed, cr, ci, _ in result:
        prev = acc.get(packed)
        if prev is None:
            acc[packed] = (key, cr, ci)
        else:
            acc[packed] = (key, prev[1] + cr, prev[2] + ci)
    terms = [(k, p, cr, ci) for p, (k, cr, ci) in acc.items() if cr or ci]
    terms.sort(reverse=True)
    if want_scale:
        return terms, mr, mi
    return content_normalize(terms)
