import pytest

from slocc4.poly import (
    MultiPoly, PolyRing, RingMismatch, UniPoly, parse_poly, squarefree_part,
    uni_ext_gcd, uni_gcd,
)
from slocc4.scalars import ZERO, GaussianRational, Rat, gr

R16 = PolyRing(16)


def x(k, ring=R16):
    return MultiPoly.var(ring, k - 1)


def test_mul_conjugate_pair():
    # (x1+i)(x1-i) = x1^2 + 1
    p = (x(1) + MultiPoly.const(R16, gr(0, 1))) * (x(1) - MultiPoly.const(R16, gr(0, 1)))
    assert p == x(1) * x(1) + MultiPoly.const(R16, 1)


def test_eval_at_i():
    p = x(1) * x(1) + MultiPoly.const(R16, 1)
    point = [ZERO] * 16
    point[0] = gr(0, 1)
    assert p.evaluate(point) == ZERO


def test_partial_derivative():
    p = x(1) * x(16)
    assert p.partial_derivative(0) == x(16)


def test_ring_mismatch():
    other = PolyRing(16, "lex")
    with pytest.raises(RingMismatch):
        _ = x(1) + MultiPoly.var(other, 0)


def test_derivative_matches_line_restriction():
    # restrict p to a line along axis k and compare univariate derivatives
    ring = PolyRing(3)
    p = parse_poly(ring, "x1^3*x2 - 2*x1*x3 + x2^2 + 7")
    base = [gr(1), gr(-2), gr(Rat(1, 3))]
    k = 0
    # q(t) = p(base + t*e_k) as a UniPoly via substitution with a 1-var ring
    t_ring = PolyRing(1, names=("t",))
    images = [MultiPoly.const(t_ring, b) for b in base]
    images[k] = images[k] + MultiPoly.var(t_ring, 0)
    q = p.substitute(t_ring, images)
    qc = [q.terms.get((d,), ZERO) for d in range(q.total_degree() + 1)]
    uq = UniPoly(qc)
    dp = p.partial_derivative(k)
    dq = dp.substitute(t_ring, images)
    dqc = [dq.terms.get((d,), ZERO) for d in range(dq.total_degree() + 1)]
    assert uq.derivative() == UniPoly(dqc)


def test_derivative_degree_one_finite_difference():
    ring = PolyRing(2)
    p = parse_poly(ring, "3*x1*x2 + 5*x1 - 2")  # degree 1 in x1
    a = [gr(Rat(1, 2)), gr(4)]
    b = [gr(Rat(5, 2)), gr(4)]
    h = b[0] - a[0]
    diff = (p.evaluate(b) - p.evaluate(a)) / h
    mid = [(a[0] + b[0]) / gr(2), gr(4)]
    assert p.partial_derivative(0).evaluate(mid) == diff


def test_parse_poly_roundtrip():
    ring = PolyRing(2, names=("l1", "l2"))
    p = parse_poly(ring, "l1^4+2*l1^3*l2")
    q = MultiPoly.var(ring, 0, 4) + MultiPoly.var(ring, 0, 3) * MultiPoly.var(ring, 1) * 2
    assert p == q
    assert parse_poly(ring, "-l1-l2") == -(MultiPoly.var(ring, 0) + MultiPoly.var(ring, 1))
    assert parse_poly(ring, "1/2*l1 + i*l2").evaluate([gr(2), gr(3)]) == gr(1, 3)


def _uni(*coeffs):
    return UniPoly([gr(c) if not isinstance(c, GaussianRational) else c
                    for c in coeffs])


def test_unipoly_divmod():
    f = _uni(-1, 0, 0, 1)          # T^3 - 1
    g = _uni(-1, 1)                # T - 1
    q, r = f.divmod(g)
    assert r.is_zero()
    assert q == _uni(1, 1, 1)


def test_squarefree_examples():
    assert squarefree_part(_uni(0, 0, 0, 1)) == _uni(0, 1)            # T^3 -> T
    assert squarefree_part(_uni(0, 0, -1, 1)) == _uni(0, -1, 1)       # T^2(T-1)
    f = _uni(1, 0, 1) * _uni(1, 0, 1)                                  # (T^2+1)^2
    assert squarefree_part(f) == _uni(1, 0, 1)


def test_squarefree_zero_error():
    with pytest.raises(ValueError):
        squarefree_part(UniPoly.zero())


def test_squarefree_properties():
    f = _uni(0, 1) ** 2 * _uni(-1, 1) * _uni(1, 0, 1) ** 3
    s = squarefree_part(f)
    # squarefree_part(f) * gcd(f, f') has the same roots as f
    g = uni_gcd(f, f.derivative())
    assert uni_gcd(s, s.derivative()).degree() == 0
    # s divides f and every root of f is a root of s: f | s^k for some k
    q, r = f.divmod(s)
    assert r.is_zero()
    sk = s
    for _ in range(10):
        qq, rr = sk.divmod(f)
        if rr.is_zero():
            break
        sk = sk * s
    else:
        raise AssertionError("root sets differ")


def test_ext_gcd():
    a = _uni(1, 0, 1)      # T^2+1
    b = _uni(gr(0, 1), 1)  # T + i
    g, s, t = uni_ext_gcd(a, b)
    assert s * a + t * b == g
    assert g == b.monic()  # T+i divides T^2+1
