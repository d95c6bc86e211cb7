"""The four generating invariants H, L, M, D and the signature map F.

The polynomials are loaded from the embedded monomial lists; variable x_k
corresponds to the amplitude of basis state b_k.  Degrees are (2, 4, 4, 6).
Invariance is verified infinitesimally: for every basis generator X of g0
the Lie derivative polynomial sum_k (X.x)_k dP/dx_k must vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from . import tables
from .algebra import StateVector, cartan_point, _act_even_basis
from .poly import MultiPoly, PolyRing, parse_poly
from .scalars import GaussianRational, gr

RING16 = PolyRing(16)
LAMBDA_RING = PolyRing(4, names=("l1", "l2", "l3", "l4"))

NAMES = ("H", "L", "M", "D")
DEGREES = (2, 4, 4, 6)
TERM_COUNTS = (8, 24, 24, 144)


class InvariantDataError(RuntimeError):
    pass


@dataclass(frozen=True)
class InvariantSignature:
    H: GaussianRational
    L: GaussianRational
    M: GaussianRational
    D: GaussianRational

    def as_tuple(self) -> Tuple[GaussianRational, ...]:
        return (self.H, self.L, self.M, self.D)

    def is_zero(self) -> bool:
        return not any(self.as_tuple())

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


@dataclass(frozen=True)
class InvariantSet:
    H: MultiPoly
    L: MultiPoly
    M: MultiPoly
    D: MultiPoly
    notes: Tuple[str, ...]

    def as_tuple(self) -> Tuple[MultiPoly, ...]:
        return (self.H, self.L, self.M, self.D)


def _parse_monomial_list(text: str, degree: int) -> Tuple[List[Tuple[Tuple[int, ...], int]], List[str]]:
    terms = []
    notes = []
    for token in text.split():
        sign = 1
        body = token
        if body.startswith("-"):
            sign = -1
            body = body[1:]
        idxs = body.split(".")
        if len(idxs) != degree or any(int(v) > 16 for v in idxs):
            repaired = _repair_token(idxs, degree)
            if repaired is None:
                raise InvariantDataError(f"monomial {token!r} cannot be repaired")
            notes.append(
                f"repaired monomial token {token!r} -> "
                f"{'.'.join(repaired)} (degree/index constraint)")
            idxs = repaired
        expo = [0] * 16
        for v in idxs:
            expo[int(v) - 1] += 1
        terms.append((tuple(expo), sign))
    return terms, notes


def _repair_token(idxs: List[str], degree: int):
    """Split a fused index ("17" -> "1","7") when it restores the degree."""
    for pos, tok in enumerate(idxs):
        if len(tok) == 2 and len(idxs) == degree - 1:
            a, b = tok[0], tok[1]
            if a != "0" and b != "0" and int(a) <= 16 and int(b) <= 16:
                cand = idxs[:pos] + [a, b] + idxs[pos + 1:]
                if all(1 <= int(v) <= 16 for v in cand):
                    return cand
    return None


@lru_cache(maxsize=1)
def load_invariants() -> InvariantSet:
    polys = []
    all_notes: List[str] = []
    checks = []
    for text, degree, count in zip(
            (tables.INVARIANT_H_MONOMIALS, tables.INVARIANT_L_MONOMIALS, tables.INVARIANT_M_MONOMIALS, tables.INVARIANT_D_MONOMIALS),
            DEGREES, TERM_COUNTS):
        terms, notes = _parse_monomial_list(text, degree)
        all_notes.extend(notes)
        if len(terms) != count:
            raise InvariantDataError(
                f"expected {count} monomials of degree {degree}, got {len(terms)}")
        p = MultiPoly.from_terms(
            RING16, [(m, gr(s)) for m, s in terms])
        if len(p) != count:
            raise InvariantDataError("duplicate monomials collapsed unexpectedly")
        polys.append(p)
        checks.append(sum(s for _, s in terms))
    # transcription checksum: signed term sums per polynomial
    if checks != [0, 0, 0, 0]:
        raise InvariantDataError(f"sign checksum failed: {checks}")
    return InvariantSet(polys[0], polys[1], polys[2], polys[3], tuple(all_notes))


def evaluate_signature(x: StateVector) -> InvariantSignature:
    inv = load_invariants()
    vals = [p.evaluate(list(x.amps)) for p in inv.as_tuple()]
    return InvariantSignature(*vals)


# ---------------------------------------------------------------------------
# infinitesimal invariance


def lie_derivative(p: MultiPoly, generator_index: int) -> MultiPoly:
    """sum_k (X.x)_k dP/dx_k for the g0 basis generator with the given index."""
    total = MultiPoly.zero(RING16)
    for k in range(16):
        dp = p.partial_derivative(k)
        if dp.is_zero():
            continue
        # (X.x)_k = sum_j c_jk x_j where X.b_j = sum_k c_jk b_k
        lin_terms = {}
        for j in range(16):
            for k2, coeff in _act_even_basis(generator_index, j):
                if k2 == k:
                    e = [0] * 16
                    e[j] = 1
                    lin_terms[tuple(e)] = gr(coeff)
        if not lin_terms:
            continue
        lin = MultiPoly(RING16, lin_terms)
        total = total + lin * dp
    return total


def check_infinitesimal_invariance() -> List[Tuple[int, str, bool]]:
    """All 48 (generator, invariant) Lie-derivative identities; exact."""
    inv = load_invariants()
    report = []
    for gen in range(12):
        for name, p in zip(NAMES, inv.as_tuple()):
            ok = lie_derivative(p, gen).is_zero()
            report.append((gen, name, ok))
    return report


# ---------------------------------------------------------------------------
# symbolic values on the semisimple families


def family_element_images(label: int) -> List[MultiPoly]:
    """Amplitudes of the family's parametrised element, linear in l1..l4."""
    cols = tables.FAMILY_PARAM_COLUMNS[label]
    images = []
    for k in range(16):
        images.append(MultiPoly.zero(LAMBDA_RING))
    for pidx, col in enumerate(cols):
        lam = MultiPoly.var(LAMBDA_RING, pidx)
        point = cartan_point([gr(v) for v in col])
        for k, amp in enumerate(point.amps):
            if amp:
                images[k] = images[k] + lam * MultiPoly.const(LAMBDA_RING, amp)
    return images


def symbolic_family_values(label: int) -> List[MultiPoly]:
    """F evaluated on the family element, as polynomials in the parameters."""
    inv = load_invariants()
    images = family_element_images(label)
    return [p.substitute(LAMBDA_RING, images) for p in inv.as_tuple()]


def expected_family_values(label: int) -> List[MultiPoly]:
    return [parse_poly(LAMBDA_RING, s) for s in tables.FAMILY_INVARIANT_VALUES[label]]


def check_symbolic_family_values() -> List[Tuple[int, bool]]:
    out = []
    for label in range(1, 11):
        got = symbolic_family_values(label)
        want = expected_family_values(label)
        out.append((label, got == want))
    return out


# ---------------------------------------------------------------------------
# relation ideals between the evaluated invariants

HLMD_RING = PolyRing(4, names=("H", "L", "M", "D"))


def check_relations() -> List[Tuple[int, bool]]:
    """Substitute each family's values into its relation generators."""
    out = []
    for label in range(2, 11):
        values = expected_family_values(label)
        ok = True
        for rel_text in tables.FAMILY_RELATION_IDEALS[label]:
            rel = parse_poly(HLMD_RING, rel_text)
            if not rel.substitute(LAMBDA_RING, values).is_zero():
                ok = False
        out.append((label, ok))
    return out


def vanishing_pattern(sig: InvariantSignature) -> Dict[str, bool]:
    """The discriminators used to tell families 4/5/6 and 7/8/9 apart."""
    H, L, M, D = sig.as_tuple()
    four = gr(4)
    return {
        "L=0": not L, "M=0": not M, "D=0": not D,
        "L=-M": L == -M,
        "H^2+4M=0": not (H * H + four * M),
        "H^2-4L=0": not (H * H - four * L),
        "H^2-4M=0": not (H * H - four * M),
    }
