"""The compiled and pure kernels must produce identical results."""

import pytest
from hypothesis import given, settings, strategies as st

import slocc4.groebner as G
from slocc4 import _gbpure
from slocc4.groebner import Ideal, Limits, buchberger
from slocc4.poly import MultiPoly, PolyRing
from slocc4.scalars import gr

try:
    from slocc4 import _gbcore
except ImportError:  # pragma: no cover - extension not built
    _gbcore = None

needs_ext = pytest.mark.skipif(_gbcore is None, reason="extension not built")

LIM = Limits(max_degree=12, time_budget=20.0)


def _run_with(kernel, gens, order="degrevlex"):
    saved = G.kernel
    G.kernel = kernel
    try:
        return buchberger(Ideal(gens, order), LIM)
    finally:
        G.kernel = saved


coeff = st.integers(min_value=-3, max_value=3)


@st.composite
def polys(draw):
    ring = PolyRing(3, "degrevlex", names=("x", "y", "z"))
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        mono = tuple(draw(st.integers(0, 2)) for _ in range(3))
        terms[mono] = gr(draw(coeff), draw(coeff))
    return MultiPoly(ring, terms)


@needs_ext
@settings(max_examples=30, deadline=None)
@given(st.lists(polys(), min_size=1, max_size=3), st.sampled_from(["degrevlex", "lex"]))
def test_buchberger_results_identical(gens, order):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    a = _run_with(_gbpure, gens, order)
    b = _run_with(_gbcore, gens, order)
    assert a.verdict == b.verdict
    assert a.basis == b.basis


@needs_ext
def test_low_level_reduction_identical():
    spec_p = _gbpure.make_spec(4, "degrevlex")
    spec_c = _gbcore.make_spec(4, "degrevlex")
    assert spec_p == spec_c
    pairs = [(_gbpure.pack((1, 2, 0, 1), spec_p), 3, -2),
             (_gbpure.pack((0, 1, 1, 0), spec_p), 1, 1),
             (_gbpure.pack((2, 0, 0, 0), spec_p), -4, 0)]
    red = [(_gbpure.pack((0, 1, 0, 0), spec_p), 2, 1),
           (_gbpure.pack((0, 0, 0, 0), spec_p), 0, -1)]
    fp = _gbpure.from_pairs(pairs, spec_p)
    fc = _gbcore.from_pairs(pairs, spec_c)
    assert fp == fc
    gp = _gbpure.from_pairs(red, spec_p)
    assert _gbpure.reduce_full(fp, [gp], spec_p) == \
        _gbcore.reduce_full(fc, [gp], spec_c)
    assert _gbpure.s_poly(fp, gp, spec_p) == _gbcore.s_poly(fc, gp, spec_c)
