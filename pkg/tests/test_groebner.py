from hypothesis import given, settings, strategies as st

from slocc4.groebner import (
    GBResult, Ideal, Limits, buchberger, contains_one, modular_triviality_hint,
    normal_form, spoly,
)
from slocc4.poly import MultiPoly, PolyRing, parse_poly
from slocc4.scalars import gr

LOOSE = Limits(max_degree=40, time_budget=30.0)


def ring2(order="lex"):
    # names y, x: lex with y > x
    return PolyRing(2, order, names=("y", "x"))


def test_lex_example():
    R = ring2("lex")
    gens = [parse_poly(R, "x-1"), parse_poly(R, "y-x")]
    res = buchberger(Ideal(gens, "lex"), LOOSE)
    assert res.verdict == "proper"
    models = {str(p) for p in res.basis}
    assert models == {"y-1", "x-1"}


def test_degrevlex_spair_reduces_to_zero():
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    gens = [parse_poly(R, "x^2"), parse_poly(R, "x*y")]
    res = buchberger(Ideal(gens, "degrevlex"), LOOSE)
    assert res.verdict == "proper"
    assert {str(p) for p in res.basis} == {"x^2", "x*y"}


def test_lex_already_a_basis():
    R = ring2("lex")
    gens = [parse_poly(R, "x^2+1"), parse_poly(R, "y-x")]
    res = buchberger(Ideal(gens, "lex"), LOOSE)
    assert res.verdict == "proper"
    assert {str(p) for p in res.basis} == {"x^2+1", "y-x"}


def test_contains_one_simple():
    R = PolyRing(1, names=("x",))
    gens = [parse_poly(R, "x"), parse_poly(R, "x+1")]
    assert contains_one(Ideal(gens), LOOSE) == "yes"


def test_contains_one_gaussian_proper():
    # x^2+1 splits over Q(i); the ideal is proper
    R = PolyRing(1, names=("x",))
    assert contains_one(Ideal([parse_poly(R, "x^2+1")]), LOOSE) == "no"


def test_contains_one_unsolvable_system():
    # x^2 = -1 forces xy = x^2 = -1 under y = x, contradicting xy = 1
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    gens = [parse_poly(R, "x^2+1"), parse_poly(R, "y-x"), parse_poly(R, "x*y-1")]
    assert contains_one(Ideal(gens), LOOSE) == "yes"
    # and the solvable variant is proper
    gens2 = [parse_poly(R, "x^2+1"), parse_poly(R, "y-x"), parse_poly(R, "x*y+1")]
    assert contains_one(Ideal(gens2), LOOSE) == "no"


def test_normal_form_examples():
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    xx = parse_poly(R, "x^2")
    assert normal_form(parse_poly(R, "x^2*y"), [xx]).is_zero()
    assert normal_form(parse_poly(R, "x+y"), [parse_poly(R, "y")]) == parse_poly(R, "x")
    one = parse_poly(R, "1")
    assert normal_form(one, [parse_poly(R, "x")]) == one


def test_normal_form_rational_coefficients():
    R = PolyRing(2, "lex", names=("x", "y"))
    p = parse_poly(R, "x^2*y + x")
    g = parse_poly(R, "2*x-1")  # x -> 1/2
    r = normal_form(p, [g])
    assert r == parse_poly(R, "1/4*y + 1/2")


def test_cyclic3_properties():
    R = PolyRing(3, "degrevlex", names=("x", "y", "z"))
    gens = [parse_poly(R, "x+y+z"), parse_poly(R, "x*y+y*z+z*x"),
            parse_poly(R, "x*y*z-1")]
    res = buchberger(Ideal(gens), LOOSE)
    assert res.verdict == "proper"
    _assert_buchberger_criterion(res)
    _assert_idempotent(res, "degrevlex")
    # 1 is not in the ideal (the system has solutions)
    assert contains_one(Ideal(gens), LOOSE) == "no"


def _assert_buchberger_criterion(res: GBResult):
    basis = res.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spoly(basis[i], basis[j])
            assert normal_form(s, basis).is_zero()


def _assert_idempotent(res: GBResult, order):
    again = buchberger(Ideal(res.basis, order), LOOSE)
    assert again.verdict == res.verdict
    assert again.basis == res.basis


def test_resource_exhaustion_degree():
    R = PolyRing(3, "degrevlex", names=("x", "y", "z"))
    gens = [parse_poly(R, "x^6+y^6+z^6-1"), parse_poly(R, "x^5*y^3+z^7"),
            parse_poly(R, "x*y*z^6-x")]
    res = buchberger(Ideal(gens), Limits(max_degree=4, time_budget=5.0))
    assert res.verdict == "resource_exhausted"
    assert res.basis is None
    assert contains_one(Ideal(gens), Limits(max_degree=4, time_budget=5.0)) == "unknown"


def test_order_independence_of_triviality():
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    gens = [parse_poly(R, "x^2+1"), parse_poly(R, "y-x"), parse_poly(R, "x*y-1")]
    for order in ("degrevlex", "lex"):
        assert contains_one(Ideal(gens, order), LOOSE) == "yes"
    gens2 = [parse_poly(R, "x^2-y"), parse_poly(R, "y^2-2")]
    for order in ("degrevlex", "lex"):
        assert contains_one(Ideal(gens2, order), LOOSE) == "no"


def test_block_order_eliminates():
    # block(1) eliminates x: the basis contains a polynomial in y alone
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    gens = [parse_poly(R, "x^2-y"), parse_poly(R, "x^3-x")]
    res = buchberger(Ideal(gens, "block", block=1), LOOSE)
    assert res.verdict == "proper"
    pure_y = [p for p in res.basis if all(m[0] == 0 for m in p.terms)]
    assert pure_y
    # x^2 = y and x^3 = x force y^2 = x^4 = x^2 = y
    target = parse_poly(R, "y^2-y")
    assert any(p.terms == target.terms for p in pure_y)


def test_diagnostic_trace():
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    res = buchberger(Ideal([parse_poly(R, "x^2-y"), parse_poly(R, "y^2-x")]),
                     LOOSE)
    text = res.trace()
    assert "verdict: proper" in text
    assert "pairs_processed" in text and "max_degree_reached" in text


def test_modular_hint_agrees():
    R = PolyRing(2, "degrevlex", names=("x", "y"))
    trivial = Ideal([parse_poly(R, "x^2+1"), parse_poly(R, "y-x"),
                     parse_poly(R, "x*y-1")])
    proper = Ideal([parse_poly(R, "x^2-y")])
    assert modular_triviality_hint(trivial) is True
    assert modular_triviality_hint(proper) is False


coeffs = st.integers(min_value=-4, max_value=4)


@st.composite
def small_polys(draw):
    R = PolyRing(3, "degrevlex", names=("x", "y", "z"))
    nterms = draw(st.integers(min_value=1, max_value=4))
    terms = {}
    for _ in range(nterms):
        mono = tuple(draw(st.integers(min_value=0, max_value=2)) for _ in range(3))
        c = draw(coeffs)
        ci = draw(coeffs)
        terms[mono] = gr(c, ci)
    return MultiPoly(R, terms)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_polys(), min_size=1, max_size=3))
def test_random_ideals_satisfy_buchberger_criterion(gens):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    res = buchberger(Ideal(gens), Limits(max_degree=14, time_budget=20.0))
    if res.verdict == "resource_exhausted":
        return
    _assert_buchberger_criterion(res)
    _assert_idempotent(res, "degrevlex")
    for g in gens:
        assert normal_form(g, res.basis).is_zero()
