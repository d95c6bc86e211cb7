"""Exact Jordan decomposition in g1, nilpotency tests, centralisers.

jordan_decompose uses the classical Newton iteration on the squarefree part
of the characteristic polynomial of ad(x), entirely inside Q(i): the
semisimple part of ad(x) is z(ad x) for a polynomial z computed modulo the
characteristic polynomial, and the nilpotent part of x is read off one
column of ad(x) - z(ad x) because [., h^(1)] exposes the odd coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from . import linalg
from .algebra import G0Element, LieElement, StateVector, get_algebra, state_bits
from .invariants import evaluate_signature
from .poly import UniPoly, squarefree_part, uni_ext_gcd
from .scalars import ONE, ZERO, GaussianRational


class JordanError(RuntimeError):
    """A structural guarantee failed; indicates an implementation bug."""


@dataclass(frozen=True)
class JordanPair:
    s: StateVector
    n: StateVector


@dataclass
class CentralizerInfo:
    basis: List[LieElement]
    dim: int
    dim_even: int
    dim_odd: int
    derived_dim: int

    def dims(self) -> Tuple[int, int, int, int]:
        return (self.dim, self.dim_even, self.dim_odd, self.derived_dim)


def _poly_mod(p: UniPoly, mod: UniPoly) -> UniPoly:
    return p % mod


def jordan_decompose(x: StateVector) -> JordanPair:
    """x = s + n with s semisimple, n nilpotent, [s, n] = 0, both in g1."""
    A = get_algebra()
    ad = A.ad_matrix_odd(x)
    if linalg.mat_eq_zero(ad):
        return JordanPair(x, StateVector.zero())
    chi = linalg.char_poly(ad)
    f = squarefree_part(chi)
    # Newton iteration z <- z - f(z)/f'(z) in Q(i)[T]/(chi), started at T
    z = UniPoly.x()
    fprime = f.derivative()
    for _ in range(8):
        fz = _compose_mod(f, z, chi)
        if fz.is_zero():
            break
        fpz = _compose_mod(fprime, z, chi)
        g, sinv, _ = uni_ext_gcd(fpz, chi)
        if g.degree() != 0:
            raise JordanError("f'(z) not invertible modulo chi")
        inv = sinv * (ONE / g.coeffs[0])
        z = (z - fz * inv) % chi
    if not _compose_mod(f, z, chi).is_zero():
        raise JordanError("Newton iteration did not converge")
    # read the nilpotent part off the h^(1) column of ad(x) - z(ad x)
    col_h1 = [ONE if r == 0 else ZERO for r in range(28)]
    zcol = _poly_at_matrix_column(z, ad, col_h1)
    ncol = [a - b for a, b in zip(_matcol(ad, col_h1), zcol)]
    n_amps = [ZERO] * 16
    for k in range(16):
        w = 1 if state_bits(k)[0] == 0 else -1
        # [n, h1] = -w_k n_k on coordinate k
        n_amps[k] = -(ncol[12 + k]) if w == 1 else ncol[12 + k]
    n = StateVector(n_amps)
    s = x - n
    _verify_pair(A, x, s, n, f)
    return JordanPair(s, n)


def _matcol(m, v):
    return linalg.mat_vec(m, v)


def _poly_at_matrix_column(p: UniPoly, m, col):
    """(p(m)) applied to the vector col, via Horner on matrix-vector products."""
    out = [ZERO] * len(col)
    for c in reversed(p.coeffs):
        out = linalg.mat_vec(m, out)
        if c:
            out = [o + c * v for o, v in zip(out, col)]
    return out


def _compose_mod(f: UniPoly, z: UniPoly, mod: UniPoly) -> UniPoly:
    out = UniPoly.zero()
    for c in reversed(f.coeffs):
        out = (out * z) % mod
        if c:
            out = out + UniPoly.const(c)
    return out


def _verify_pair(A, x, s, n, f):
    ad_s = A.ad_matrix_odd(s)
    ad_n = A.ad_matrix_odd(n)
    if not A.bracket_odd_odd(s, n).is_zero():
        raise JordanError("jordan parts do not commute")
    if not linalg.image_chain_nilpotent(ad_n):
        raise JordanError("nilpotent part is not nilpotent")
    if not linalg.mat_eq_zero(linalg.poly_at_matrix(f, ad_s)):
        raise JordanError("semisimple part is not semisimple")


def is_semisimple(x: StateVector) -> bool:
    A = get_algebra()
    ad = A.ad_matrix_odd(x)
    if linalg.mat_eq_zero(ad):
        return x.is_zero()
    chi = linalg.char_poly(ad)
    f = squarefree_part(chi)
    return linalg.mat_eq_zero(linalg.poly_at_matrix(f, ad))


def is_nilpotent(x: StateVector) -> bool:
    """ad-nilpotency, cross-checked against the vanishing of the invariants."""
    A = get_algebra()
    by_ad = linalg.image_chain_nilpotent(A.ad_matrix_odd(x))
    by_inv = evaluate_signature(x).is_zero()
    if by_ad != by_inv:
        raise JordanError(
            "ad-nilpotency and invariant-cone membership disagree "
            f"on {x}; the two criteria must coincide")
    return by_ad


def centralizer(x: StateVector) -> CentralizerInfo:
    """z_g(x) with graded dimensions and the derived-algebra dimension."""
    A = get_algebra()
    # ad(x) swaps the grading, so the kernel splits into graded pieces
    even_kernel = linalg.nullspace(A.ad_even_to_odd_of_odd(x))   # inside g0
    odd_kernel = linalg.nullspace(A.ad_odd_to_even(x))           # inside g1
    basis: List[LieElement] = []
    for v in even_kernel:
        basis.append(LieElement(G0Element(v), StateVector.zero()))
    for v in odd_kernel:
        basis.append(LieElement(G0Element.zero(), StateVector(v)))
    derived = _derived_dimension(A, basis)
    return CentralizerInfo(
        basis=basis,
        dim=len(basis),
        dim_even=len(even_kernel),
        dim_odd=len(odd_kernel),
        derived_dim=derived,
    )


def _derived_dimension(A, basis: List[LieElement]) -> int:
    span: List[List[GaussianRational]] = []
    rank = 0
    current = basis
    while True:
        vectors = []
        for i in range(len(current)):
            for j in range(len(basis)):
                w = A.bracket(current[i], basis[j]).coords()
                if any(w):
                    vectors.append(list(w))
        new_span = span + vectors
        new_rank = linalg.rank(new_span) if new_span else 0
        if new_rank == rank:
            return rank
        # keep a reduced spanning set and iterate once more to stability
        red, pivots = linalg.rref(new_span)
        span = [red[r] for r in range(len(pivots))]
        rank = new_rank
        current = [LieElement.from_coords(v) for v in span]


def ad_rank_sequence(x: StateVector) -> Tuple[int, ...]:
    A = get_algebra()
    return linalg.rank_sequence(A.ad_matrix_odd(x))
