import pytest
from hypothesis import given, strategies as st

from slocc4.scalars import (
    ParseError, Rat, format_gr, gr, gr_sqrt, parse_gr, rat_sqrt,
)


def test_norm_product():
    a = gr(Rat(1, 2), Rat(1, 2))
    b = gr(Rat(1, 2), Rat(-1, 2))
    assert a * b == gr(Rat(1, 2))


def test_division_by_i():
    assert gr(1) / gr(0, 1) == gr(0, -1)


def test_additive_inverse():
    assert gr(2, -3) + gr(-2, 3) == gr(0)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gr(1) / gr(0)


rats = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


def _g(re, im):
    return gr(Rat(re.numerator, re.denominator), Rat(im.numerator, im.denominator))


@given(rats, rats, rats, rats, rats, rats)
def test_field_axioms(a1, a2, b1, b2, c1, c2):
    a, b, c = _g(a1, a2), _g(b1, b2), _g(c1, c2)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == gr(0)
    if b:
        assert (a / b) * b == a
        assert b * (gr(1) / b) == gr(1)


@given(rats, rats)
def test_parse_format_roundtrip(x, y):
    z = _g(x, y)
    assert parse_gr(format_gr(z)) == z


@pytest.mark.parametrize("text,expect", [
    ("0", gr(0)),
    ("-3/2", gr(Rat(-3, 2))),
    ("1/2+1/2i", gr(Rat(1, 2), Rat(1, 2))),
    ("i", gr(0, 1)),
    ("-i", gr(0, -1)),
    ("2-3i", gr(2, -3)),
    ("-2/5i", gr(0, Rat(-2, 5))),
    ("1+i", gr(1, 1)),
])
def test_grammar_examples(text, expect):
    assert parse_gr(text) == expect
    assert parse_gr(format_gr(expect)) == expect


@pytest.mark.parametrize("bad", ["", "1/0", "2+", "x", "1..2", "3i4", "+", "1/2/3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_gr(bad)


def test_rat_sqrt():
    assert rat_sqrt(Rat(4, 9)) == Rat(2, 3)
    assert rat_sqrt(Rat(2)) is None
    assert rat_sqrt(Rat(0)) == 0


def test_gr_sqrt():
    assert gr_sqrt(gr(4)) == gr(2)
    assert gr_sqrt(gr(-4)) == gr(0, 2)
    # (1+i)^2 = 2i
    w = gr_sqrt(gr(0, 2))
    assert w is not None and w * w == gr(0, 2)
    # i is not a square in Q(i)
    assert gr_sqrt(gr(0, 1)) is None
    assert gr_sqrt(gr(2)) is None


@given(rats, rats)
def test_gr_sqrt_of_squares(x, y):
    z = _g(x, y)
    w = gr_sqrt(z * z)
    assert w is not None and w * w == z * z
