"""The 28-dimensional graded Lie algebra g = g0 + g1 with g0 = sl(2,C)^4.

g1 is the four-qubit state space (C^2)^{x4}.  Basis layout, fixed everywhere:

    indices 0..11   even part, factor-major: (h, e, f) per sl(2) copy, where
                    h = diag(1,-1), e = [[0,1],[0,0]], f = [[0,0],[1,0]]
    indices 12..27  odd part b1..b16 with b_k = e_{binary(16-k)}, so
                    b1 = e1111, b2 = e1110, ..., b16 = e0000

The odd-odd bracket is the tensor contraction

    [x, y] = sum_m c_m (prod_{k != m} omega(x_k, y_k)) S(x_m, y_m)

with omega the symplectic form (omega(e0,e1) = 1) and S the symmetrised
pairing S(u,v)w = omega(u,w)v + omega(v,w)u valued in sl(2).  The scalars
c_m are solved for at build time from the Jacobi identity; the solution
space must be a single ray or construction fails.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from . import linalg
from .scalars import ONE, ZERO, GaussianRational, ParseError, gr, parse_gr, format_gr

DIM = 28
DIM_EVEN = 12
DIM_ODD = 16

# position p (0-based) of basis state index k: bit value at tensor factor p+1
def state_bits(k: int) -> Tuple[int, int, int, int]:
    v = 15 - k
    return ((v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1)


def bits_index(bits: Sequence[int]) -> int:
    v = (bits[0] << 3) | (bits[1] << 2) | (bits[2] << 1) | bits[3]
    return 15 - v


_BITS = [state_bits(k) for k in range(16)]
_OMEGA = ((0, 1), (-1, 0))
# S(i, j) as sparse sl(2) coordinates (t, coeff) with t in {0:h, 1:e, 2:f}
_S_TABLE = {(0, 0): ((1, 2),), (1, 1): ((2, -2),), (0, 1): ((0, -1),), (1, 0): ((0, -1),)}


class StateVector:
    """A vector in g1: 16 exact amplitudes in the b1..b16 basis."""

    __slots__ = ("amps",)

    def __init__(self, amps: Sequence[GaussianRational]):
        if len(amps) != 16:
            raise ValueError("a state has 16 amplitudes")
        self.amps = tuple(amps)

    @staticmethod
    def zero() -> "StateVector":
        return StateVector((ZERO,) * 16)

    @staticmethod
    def basis(bits: str) -> "StateVector":
        """e_{i1 i2 i3 i4} for a 4-character bit string."""
        amps = [ZERO] * 16
        amps[bits_index([int(b) for b in bits])] = ONE
        return StateVector(amps)

    @staticmethod
    def from_mapping(data: Mapping[str, str]) -> "StateVector":
        """State file content: 4-bit strings to Gaussian-rational strings."""
        amps = [ZERO] * 16
        for key, value in data.items():
            if len(key) != 4 or any(ch not in "01" for ch in key):
                raise ParseError(key, key)
            amps[bits_index([int(b) for b in key])] = parse_gr(value)
        return StateVector(amps)

    def to_mapping(self) -> Dict[str, str]:
        out = {}
        for k, a in enumerate(self.amps):
            if a:
                out["".join(str(b) for b in _BITS[k])] = format_gr(a)
        return out

    def __add__(self, other: "StateVector") -> "StateVector":
        return StateVector([a + b for a, b in zip(self.amps, other.amps)])

    def __sub__(self, other: "StateVector") -> "StateVector":
        return StateVector([a - b for a, b in zip(self.amps, other.amps)])

    def __neg__(self) -> "StateVector":
        return StateVector([-a for a in self.amps])

    def scale(self, c) -> "StateVector":
        c = c if isinstance(c, GaussianRational) else gr(c)
        return StateVector([a * c for a in self.amps])

    def is_zero(self) -> bool:
        return not any(self.amps)

    def __eq__(self, other):
        return isinstance(other, StateVector) and self.amps == other.amps

    def __hash__(self):
        return hash(self.amps)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, a in enumerate(self.amps):
            if a:
                bits = "".join(str(b) for b in _BITS[k])
                parts.append(f"({format_gr(a)})e{bits}")
        return " + ".join(parts)

    __repr__ = __str__


class G0Element:
    """An element of sl(2,C)^4 in (h,e,f) coordinates per factor."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[GaussianRational]):
        if len(coords) != 12:
            raise ValueError("g0 has dimension 12")
        self.coords = tuple(coords)

    @staticmethod
    def zero() -> "G0Element":
        return G0Element((ZERO,) * 12)

    @staticmethod
    def from_matrices(mats: Sequence[Sequence[Sequence[GaussianRational]]]) -> "G0Element":
        coords = []
        for m in mats:
            if m[0][0] + m[1][1]:
                raise ValueError("sl(2) components must be traceless")
            coords.extend((m[0][0], m[0][1], m[1][0]))
        return G0Element(coords)

    def matrices(self):
        out = []
        for m in range(4):
            a, b, c = self.coords[3 * m: 3 * m + 3]
            out.append(((a, b), (c, -a)))
        return out

    def __add__(self, other: "G0Element") -> "G0Element":
        return G0Element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "G0Element") -> "G0Element":
        return G0Element([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "G0Element":
        return G0Element([-a for a in self.coords])

    def scale(self, c) -> "G0Element":
        c = c if isinstance(c, GaussianRational) else gr(c)
        return G0Element([a * c for a in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        return isinstance(other, G0Element) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)


class LieElement:
    """even + odd, an element of g."""

    __slots__ = ("even", "odd")

    def __init__(self, even: G0Element, odd: StateVector):
        self.even = even
        self.odd = odd

    @staticmethod
    def from_odd(x: StateVector) -> "LieElement":
        return LieElement(G0Element.zero(), x)

    @staticmethod
    def from_even(a: G0Element) -> "LieElement":
        return LieElement(a, StateVector.zero())

    @staticmethod
    def from_coords(v: Sequence[GaussianRational]) -> "LieElement":
        return LieElement(G0Element(v[:12]), StateVector(v[12:]))

    def coords(self) -> Tuple[GaussianRational, ...]:
        return self.even.coords + self.odd.amps

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.even - other.even, self.odd - other.odd)

    def scale(self, c) -> "LieElement":
        return LieElement(self.even.scale(c), self.odd.scale(c))

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def theta(self) -> "LieElement":
        """The grading automorphism: +1 on even, -1 on odd."""
        return LieElement(self.even, -self.odd)

    def __eq__(self, other):
        return (isinstance(other, LieElement) and self.even == other.even
                and self.odd == other.odd)

    def __hash__(self):
        return hash((self.even, self.odd))


class SL2Quad:
    """Four 2x2 matrices over Q(i), each of determinant exactly 1."""

    __slots__ = ("mats",)

    def __init__(self, mats):
        ms = []
        for m in mats:
            a, b = m[0]
            c, d = m[1]
            a, b, c, d = (x if isinstance(x, GaussianRational) else gr(x)
                          for x in (a, b, c, d))
            if a * d - b * c != ONE:
                raise ValueError("SL2Quad components must have determinant 1")
            ms.append(((a, b), (c, d)))
        if len(ms) != 4:
            raise ValueError("need exactly four matrices")
        self.mats = tuple(ms)

    @staticmethod
    def identity() -> "SL2Quad":
        eye = ((1, 0), (0, 1))
        return SL2Quad((eye, eye, eye, eye))

    def compose(self, other: "SL2Quad") -> "SL2Quad":
        """Factorwise matrix product self * other."""
        out = []
        for m, n in zip(self.mats, other.mats):
            out.append((
                (m[0][0] * n[0][0] + m[0][1] * n[1][0],
                 m[0][0] * n[0][1] + m[0][1] * n[1][1]),
                (m[1][0] * n[0][0] + m[1][1] * n[1][0],
                 m[1][0] * n[0][1] + m[1][1] * n[1][1]),
            ))
        return SL2Quad(out)

    def inverse(self) -> "SL2Quad":
        out = []
        for m in self.mats:
            a, b = m[0]
            c, d = m[1]
            out.append(((d, -b), (-c, a)))
        return SL2Quad(out)

    def __eq__(self, other):
        return isinstance(other, SL2Quad) and self.mats == other.mats

    def __hash__(self):
        return hash(self.mats)

    def __str__(self):
        return " , ".join(
            "[[{}, {}], [{}, {}]]".format(*(format_gr(x) for row in m for x in row))
            for m in self.mats)

    __repr__ = __str__


class AlgebraConstructionError(RuntimeError):
    """No consistent bracket normalisation exists (implementation bug)."""


class Algebra:
    """Structure constants and operations; built once, then immutable."""

    def __init__(self):
        ray = self._solve_scalars()
        self.c = ray
        self.odd_odd = [[self._odd_pair(i, j) for j in range(16)]
                        for i in range(16)]
        # pin the remaining overall scale so that ad(u1) has the eigenvalue
        # profile 0^10 (±1)^8 (±2)^1 demanded by the integral root coordinates
        t = self._normalization_scale()
        if t != 1:
            from .scalars import Rat
            self.c = tuple(Rat(x) * t for x in ray)
            self.odd_odd = [[self._odd_pair(i, j) for j in range(16)]
                            for i in range(16)]
        self._sanity()

    def _normalization_scale(self):
        from . import linalg
        from .poly import UniPoly, squarefree_part
        from .scalars import Rat, gr_sqrt
        u1 = StateVector.basis("0000") + StateVector.basis("1111")
        chi = linalg.char_poly(self.ad_matrix(LieElement.from_odd(u1)))
        coeffs = list(chi.coeffs)
        if any(coeffs[k] for k in range(10)) or len(coeffs) != 29:
            raise AlgebraConstructionError("unexpected ad(u1) spectrum")
        # chi = T^10 * g(T^2); read g off the even coefficients
        tail = coeffs[10:]
        if any(tail[k] for k in range(1, len(tail), 2)):
            raise AlgebraConstructionError("ad(u1) spectrum is not symmetric")
        g = UniPoly(tail[0::2])
        gs = squarefree_part(g)
        if gs.degree() != 2:
            raise AlgebraConstructionError("ad(u1) needs two eigenvalue squares")
        b, a = gs.coeffs[1], gs.coeffs[2]
        disc = gr_sqrt(b * b - gr(4) * a * gs.coeffs[0])
        if disc is None:
            raise AlgebraConstructionError("irrational eigenvalue squares")
        r1 = (-b + disc) / (gr(2) * a)
        r2 = (-b - disc) / (gr(2) * a)
        # the multiplicity-8 square must map to 1, the simple one to 4
        def mult(root):
            m, f = 0, g
            lin = UniPoly((-root, ONE))
            while True:
                q, r = f.divmod(lin)
                if not r.is_zero():
                    return m
                m, f = m + 1, q
        big = r1 if mult(r1) == 8 else r2
        small = r2 if big is r1 else r1
        if mult(big) != 8 or mult(small) != 1:
            raise AlgebraConstructionError("unexpected eigenvalue multiplicities")
        t_gr = gr(1) / big
        if t_gr.im != 0 or small * t_gr != gr(4):
            raise AlgebraConstructionError("no rational normalisation scale")
        return Rat(t_gr.re)

    # -- construction ------------------------------------------------------

    @staticmethod
    def _odd_pair_sym(i: int, j: int) -> List[Tuple[int, int, int]]:
        """[b_i, b_j] as (even_index, coeff, factor) before fixing c."""
        bi, bj = _BITS[i], _BITS[j]
        out = []
        for m in range(4):
            w = 1
            for k in range(4):
                if k != m:
                    w *= _OMEGA[bi[k]][bj[k]]
                    if w == 0:
                        break
            if w == 0:
                continue
            for t, q in _S_TABLE[(bi[m], bj[m])]:
                out.append((3 * m + t, w * q, m))
        return out

    def _solve_scalars(self) -> Tuple[int, int, int, int]:
        """Fix c by the Jacobi identity on odd basis triples."""
        rows: List[List[GaussianRational]] = []
        # the action of an even basis element on an odd basis state
        for a, b, c in itertools.islice(
                itertools.combinations(range(16), 3), 0, 140):
            coeffs = self._jacobi_rows(a, b, c)
            rows.extend(coeffs)
            if len(rows) > 80:
                break
        mat = [[gr(v) for v in row] for row in rows]
        null = linalg.nullspace(mat)
        if len(null) != 1:
            raise AlgebraConstructionError(
                f"bracket scalar solution space has dimension {len(null)}")
        v = null[0]
        # scale to a primitive positive integer vector
        den = 1
        for q in v:
            if q.im != 0:
                raise AlgebraConstructionError("non-rational bracket scalars")
            den_q = int(q.re.denominator)
            den = den * den_q // _gcd(den, den_q)
        ints = [int(q.re * den) for q in v]
        g = 0
        for z in ints:
            g = _gcd(g, z)
        ints = [z // g for z in ints]
        if ints[0] < 0:
            ints = [-z for z in ints]
        if any(z <= 0 for z in ints):
            raise AlgebraConstructionError(f"inconsistent bracket scalars {ints}")
        return tuple(ints)

    def _jacobi_rows(self, a: int, b: int, c: int) -> List[List[int]]:
        """Linear constraints on (c1..c4) from the triple (b_a, b_b, b_c)."""
        # [[x,y],z] contributes: for each even entry (idx, q, m) of [x,y],
        # q * c_m * (action of basis idx on z)
        out: Dict[int, List[int]] = {}

        def accumulate(i, j, k, sign):
            for idx, q, m in self._odd_pair_sym(i, j):
                for k2, coeff in _act_even_basis(idx, k):
                    row = out.setdefault(k2, [0, 0, 0, 0])
                    row[m] += sign * q * coeff

        accumulate(a, b, c, 1)
        accumulate(b, c, a, 1)
        accumulate(c, a, b, 1)
        return [row for row in out.values() if any(row)]

    def _odd_pair(self, i: int, j: int) -> Tuple[Tuple[int, int], ...]:
        acc: Dict[int, int] = {}
        for idx, q, m in self._odd_pair_sym(i, j):
            acc[idx] = acc.get(idx, 0) + q * self.c[m]
        return tuple((idx, v) for idx, v in sorted(acc.items()) if v)

    def _sanity(self):
        for i, j in itertools.combinations(range(4), 2):
            if not self.bracket_odd_odd(cartan(i + 1), cartan(j + 1)).is_zero():
                raise AlgebraConstructionError("Cartan spanning set does not commute")

    # -- brackets -----------------------------------------------------------

    def bracket_even_even(self, a: G0Element, b: G0Element) -> G0Element:
        out = []
        for m in range(4):
            a1, b1, c1 = a.coords[3 * m: 3 * m + 3]
            a2, b2, c2 = b.coords[3 * m: 3 * m + 3]
            out.append(b1 * c2 - c1 * b2)
            out.append((a1 * b2 - b1 * a2) * 2)
            out.append((c1 * a2 - a1 * c2) * 2)
        return G0Element(out)

    def bracket_even_odd(self, a: G0Element, x: StateVector) -> StateVector:
        amps = [ZERO] * 16
        for k, amp in enumerate(x.amps):
            if not amp:
                continue
            bits = _BITS[k]
            for m in range(4):
                ah, ae, af = a.coords[3 * m: 3 * m + 3]
                bit = bits[m]
                if ah:
                    amps[k] = amps[k] + (ah * amp if bit == 0 else -(ah * amp))
                if ae and bit == 1:
                    k2 = bits_index(bits[:m] + (0,) + bits[m + 1:])
                    amps[k2] = amps[k2] + ae * amp
                if af and bit == 0:
                    k2 = bits_index(bits[:m] + (1,) + bits[m + 1:])
                    amps[k2] = amps[k2] + af * amp
        return StateVector(amps)

    def bracket_odd_odd(self, x: StateVector, y: StateVector) -> G0Element:
        coords = [ZERO] * 12
        for i, xi in enumerate(x.amps):
            if not xi:
                continue
            row = self.odd_odd[i]
            for j, yj in enumerate(y.amps):
                if not yj:
                    continue
                for idx, q in row[j]:
                    coords[idx] = coords[idx] + xi * yj * q
        return G0Element(coords)

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        even = self.bracket_even_even(x.even, y.even) + self.bracket_odd_odd(x.odd, y.odd)
        odd = self.bracket_even_odd(x.even, y.odd) - self.bracket_even_odd(y.even, x.odd)
        return LieElement(even, odd)

    # -- matrices -----------------------------------------------------------

    def basis_element(self, idx: int) -> LieElement:
        v = [ZERO] * 28
        v[idx] = ONE
        return LieElement.from_coords(v)

    def ad_matrix(self, x: LieElement) -> linalg.Matrix:
        cols = []
        for j in range(DIM):
            cols.append(self.bracket(x, self.basis_element(j)).coords())
        return [list(row) for row in zip(*cols)]

    def ad_matrix_odd(self, x: StateVector) -> linalg.Matrix:
        return self.ad_matrix(LieElement.from_odd(x))

    def ad_odd_to_even(self, x: StateVector) -> linalg.Matrix:
        """ad(x) restricted to g1 -> g0 (12 x 16), for graded kernels."""
        cols = []
        for j in range(16):
            y = [ZERO] * 16
            y[j] = ONE
            cols.append(self.bracket_odd_odd(x, StateVector(y)).coords)
        return [list(row) for row in zip(*cols)]

    def ad_even_to_odd_of_odd(self, x: StateVector) -> linalg.Matrix:
        """a |-> [x, a] = -[a, x] as a map g0 -> g1 (16 x 12)."""
        cols = []
        for j in range(12):
            a = [ZERO] * 12
            a[j] = ONE
            cols.append([-v for v in self.bracket_even_odd(G0Element(a), x).amps])
        return [list(row) for row in zip(*cols)]

    # -- group and permutation actions ---------------------------------------

    def group_act(self, g: SL2Quad, x: StateVector) -> StateVector:
        amps = [ZERO] * 16
        for k, amp in enumerate(x.amps):
            if not amp:
                continue
            bits = _BITS[k]
            # expand the product of per-factor images
            current = [(0, amp)]  # (partial bit value, coefficient)
            for m in range(4):
                mat = g.mats[m]
                col = bits[m]
                nxt = []
                for value, coeff in current:
                    c0 = mat[0][col]
                    c1 = mat[1][col]
                    if c0:
                        nxt.append((value << 1, coeff * c0))
                    if c1:
                        nxt.append(((value << 1) | 1, coeff * c1))
                current = nxt
            for value, coeff in current:
                amps[15 - value] = amps[15 - value] + coeff
        return StateVector(amps)

    def sym4_act(self, sigma: Sequence[int], x: StateVector) -> StateVector:
        """Permute tensor positions: the image at position p carries bit sigma(p)."""
        perm = tuple(sigma)
        if sorted(perm) != [1, 2, 3, 4]:
            raise ValueError("sigma must be a permutation of 1..4")
        amps = [ZERO] * 16
        for k, amp in enumerate(x.amps):
            if amp:
                bits = _BITS[k]
                new_bits = tuple(bits[perm[p] - 1] for p in range(4))
                amps[bits_index(new_bits)] = amp
        return StateVector(amps)

    def sym4_act_even(self, sigma: Sequence[int], a: G0Element) -> G0Element:
        perm = tuple(sigma)
        coords = [ZERO] * 12
        for p in range(4):
            src = perm[p] - 1
            coords[3 * p: 3 * p + 3] = a.coords[3 * src: 3 * src + 3]
        return G0Element(coords)

    def sym4_act_lie(self, sigma: Sequence[int], x: LieElement) -> LieElement:
        return LieElement(self.sym4_act_even(sigma, x.even),
                          self.sym4_act(sigma, x.odd))

    def conjugate_even(self, g: SL2Quad, a: G0Element) -> G0Element:
        """The adjoint action of the group on g0: factorwise g a g^{-1}."""
        out = []
        for m, mat in enumerate(g.mats):
            ah, ae, af = a.coords[3 * m: 3 * m + 3]
            p, q = mat[0]
            r, s = mat[1]
            # conjugate [[ah, ae], [af, -ah]] by [[p, q], [r, s]] (det 1)
            m00 = (p * s + q * r) * ah - p * r * ae + q * s * af
            m01 = -2 * p * q * ah + p * p * ae - q * q * af
            m10 = 2 * r * s * ah - r * r * ae + s * s * af
            out.extend((m00, m01, m10))
        return G0Element(out)

    # -- verification sweeps --------------------------------------------------

    def verify_jacobi_all(self) -> int:
        """Check the Jacobi identity on every basis triple; returns the count."""
        basis = [self.basis_element(i) for i in range(DIM)]
        table = [[self.bracket(basis[i], basis[j]) for j in range(DIM)]
                 for i in range(DIM)]
        count = 0
        for a in range(DIM):
            for b in range(a + 1, DIM):
                for c in range(b + 1, DIM):
                    s = (self.bracket(table[a][b], basis[c])
                         + self.bracket(table[b][c], basis[a])
                         + self.bracket(table[c][a], basis[b]))
                    if not s.is_zero():
                        raise AlgebraConstructionError(
                            f"Jacobi fails on basis triple {(a, b, c)}")
                    count += 1
        return count

    def verify_theta_automorphism(self) -> None:
        basis = [self.basis_element(i) for i in range(DIM)]
        for a in range(DIM):
            for b in range(DIM):
                lhs = self.bracket(basis[a], basis[b]).theta()
                rhs = self.bracket(basis[a].theta(), basis[b].theta())
                if lhs != rhs:
                    raise AlgebraConstructionError("theta is not an automorphism")

    def verify_sym4_automorphism(self, sigma: Sequence[int]) -> None:
        basis = [self.basis_element(i) for i in range(DIM)]
        for a in range(DIM):
            for b in range(DIM):
                lhs = self.sym4_act_lie(sigma, self.bracket(basis[a], basis[b]))
                rhs = self.bracket(self.sym4_act_lie(sigma, basis[a]),
                                   self.sym4_act_lie(sigma, basis[b]))
                if lhs != rhs:
                    raise AlgebraConstructionError(
                        f"permutation {tuple(sigma)} is not an automorphism")


def _act_even_basis(idx: int, k: int) -> List[Tuple[int, int]]:
    """Even basis element idx acting on odd basis state k: list of (k', coeff)."""
    m, t = divmod(idx, 3)
    bits = _BITS[k]
    bit = bits[m]
    if t == 0:
        return [(k, 1 if bit == 0 else -1)]
    if t == 1:
        if bit == 1:
            return [(bits_index(bits[:m] + (0,) + bits[m + 1:]), 1)]
        return []
    if bit == 0:
        return [(bits_index(bits[:m] + (1,) + bits[m + 1:]), 1)]
    return []


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@lru_cache(maxsize=1)
def get_algebra() -> Algebra:
    return Algebra()


def cartan(i: int) -> StateVector:
    """The fixed Cartan spanning set u1..u4."""
    pair = {1: ("0000", "1111"), 2: ("0110", "1001"),
            3: ("0101", "1010"), 4: ("0011", "1100")}[i]
    return StateVector.basis(pair[0]) + StateVector.basis(pair[1])


def cartan_point(lams: Sequence[GaussianRational]) -> StateVector:
    """lambda_1 u1 + ... + lambda_4 u4."""
    out = StateVector.zero()
    for lam, i in zip(lams, range(1, 5)):
        if lam:
            out = out + cartan(i).scale(lam)
    return out


ALL_PERMUTATIONS: Tuple[Tuple[int, int, int, int], ...] = tuple(
    itertools.permutations((1, 2, 3, 4)))
