"""The root system of g relative to the Cartan subspace, and its Weyl group.

Roots are represented by their integer value tuples (a(u1), ..., a(u4)).
Root spaces and the coroots h_a are computed from the algebra itself
(simultaneous eigenspaces of ad u_i and brackets of opposite root vectors),
so the reflection matrices need no external normalisation.

The Weyl group W (order 192) acts on coordinate vectors by exact rational
4x4 matrices.  Root subsystems are enumerated exhaustively (closures of
subsets of the 12 positive roots), deduplicated under W, and matched to the
canonical eleven classes; completeness is decided by span-intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg, tables
from .algebra import LieElement, StateVector, cartan, get_algebra
from .scalars import ONE, ZERO, GaussianRational, Rat, gr

Root = Tuple[int, int, int, int]
Mat4 = Tuple[Tuple[Rat, ...], ...]  # rows


def _mat4(rows) -> Mat4:
    return tuple(tuple(Rat(x) for x in row) for row in rows)


def mat4_mul(a: Mat4, b: Mat4) -> Mat4:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def mat4_vec(a: Mat4, v):
    return tuple(sum(c * x for c, x in zip(row, v)) for row in a)


def mat4_inv(a: Mat4) -> Mat4:
    aug = [[GaussianRational(x) for x in row] + [ONE if i == j else ZERO
           for j in range(4)] for i, row in enumerate(a)]
    red, pivots = linalg.rref(aug)
    if pivots != [0, 1, 2, 3]:
        raise ValueError("singular matrix")
    return tuple(tuple(red[i][4 + j].re for j in range(4)) for i in range(4))


IDENTITY4: Mat4 = _mat4(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
NEG_IDENTITY4: Mat4 = _mat4(((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)))


class WeylError(RuntimeError):
    pass


@dataclass
class SubsystemClass:
    label: int                      # 1..11, or 0 for the non-complete 4A1 class
    type_name: str
    rep_mask: int                   # root set of the canonical representative
    complete: bool
    size: int
    rank: int


@dataclass
class GammaGroup:
    label: int
    generators: List[Mat4]
    elements: List[Mat4]
    order: int


class WeylData:
    """Roots, reflections, the group, subsystem census and Gamma groups."""

    def __init__(self):
        self.algebra = get_algebra()
        self.roots: List[Root] = []
        self.root_vectors: Dict[Root, LieElement] = {}
        self._compute_root_spaces()
        self.root_index = {r: k for k, r in enumerate(self.roots)}
        self.coroots: Dict[Root, Tuple[Rat, ...]] = {}
        self._compute_coroots()
        self.simple = [tuple(r) for r in tables.SIMPLE_ROOTS]
        for s in self.simple:
            if s not in self.root_index:
                raise WeylError(f"simple root {s} not found in computed root system")
        self.positive = self._positive_roots()
        self.reflections: Dict[Root, Mat4] = {
            r: self._reflection(r) for r in self.roots}
        self.elements: List[Mat4] = self._generate_group()
        self.element_index = {m: k for k, m in enumerate(self.elements)}
        self.perms: List[Tuple[int, ...]] = [self._root_perm(m) for m in self.elements]
        self.inverse: List[int] = self._inverses()
        self._enumerate_subsystems()

    # -- root spaces ---------------------------------------------------------

    def _compute_root_spaces(self):
        A = self.algebra
        ads = [A.ad_matrix(LieElement.from_odd(cartan(i))) for i in range(1, 5)]
        blocks: List[Tuple[Tuple[int, ...], List[List[GaussianRational]]]] = [
            ((), [row[:] for row in linalg.identity(28)])]
        for step in range(4):
            new_blocks = []
            for tag, vectors in blocks:
                span = [list(v) for v in vectors]
                d = len(span)
                # restriction matrix R of ad(u_step): columns solve span*x = ad*v
                cols = []
                base = [list(col) for col in zip(*span)]  # 28 x d
                for v in span:
                    img = linalg.mat_vec(ads[step], v)
                    x = linalg.solve(base, img)
                    if x is None:
                        raise WeylError("ad(u_i) does not preserve eigenblock")
                    cols.append(x)
                R = [list(row) for row in zip(*cols)]
                for ev in (-2, -1, 0, 1, 2):
                    m = [row[:] for row in R]
                    for k in range(d):
                        m[k][k] = m[k][k] - gr(ev)
                    null = linalg.nullspace(m)
                    if not null:
                        continue
                    vecs = []
                    for coeffs in null:
                        w = [ZERO] * 28
                        for c, v in zip(coeffs, span):
                            if c:
                                w = [wi + c * vi for wi, vi in zip(w, v)]
                        vecs.append(w)
                    new_blocks.append((tag + (ev,), vecs))
            if sum(len(v) for _, v in new_blocks) != 28:
                raise WeylError("eigenspace split lost dimensions")
            blocks = new_blocks
        for tag, vectors in blocks:
            if tag == (0, 0, 0, 0):
                if len(vectors) != 4:
                    raise WeylError("Cartan centraliser is not 4-dimensional")
                continue
            if len(vectors) != 1:
                raise WeylError(f"root space {tag} is not 1-dimensional")
            self.roots.append(tag)
            self.root_vectors[tag] = LieElement.from_coords(vectors[0])
        if len(self.roots) != 24:
            raise WeylError(f"expected 24 roots, found {len(self.roots)}")
        self.roots.sort()

    def _compute_coroots(self):
        A = self.algebra
        # u-coordinate slots: amplitude indices of e1111, e1001, e1010, e1100
        slots = (0, 6, 5, 3)
        for r in self.roots:
            x = self.root_vectors[r]
            y = self.root_vectors[tuple(-v for v in r)]
            z = A.bracket(x, y)
            if not z.even.is_zero():
                raise WeylError("[g_a, g_-a] escaped the Cartan subspace")
            lam = [z.odd.amps[s] for s in slots]
            if z.odd != _cartan_point_gr(lam):
                raise WeylError("[g_a, g_-a] escaped the Cartan subspace")
            val = sum((l * gr(c) for l, c in zip(lam, r)), start=ZERO)
            if not val:
                raise WeylError("degenerate coroot")
            scale = gr(2) / val
            coro = []
            for l in lam:
                q = l * scale
                if q.im != 0:
                    raise WeylError("coroot is not rational")
                coro.append(q.re)
            self.coroots[r] = tuple(coro)

    def _positive_roots(self) -> List[Root]:
        basis = [[GaussianRational(v) for v in s] for s in self.simple]
        mat = [list(col) for col in zip(*basis)]
        pos = []
        for r in self.roots:
            x = linalg.solve(mat, [GaussianRational(v) for v in r])
            if x is None:
                raise WeylError("root outside simple-root lattice")
            signs = [c.re for c in x]
            if all(s >= 0 for s in signs):
                pos.append(r)
        if len(pos) != 12:
            raise WeylError(f"expected 12 positive roots, found {len(pos)}")
        return pos

    def _reflection(self, r: Root) -> Mat4:
        h = self.coroots[r]
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                v = (Rat(1) if i == j else Rat(0)) - Rat(r[j]) * h[i]
                row.append(v)
            rows.append(tuple(row))
        return tuple(rows)

    def _generate_group(self) -> List[Mat4]:
        gens = [self.reflections[s] for s in self.simple]
        seen = {IDENTITY4}
        queue = [IDENTITY4]
        while queue:
            w = queue.pop()
            for g in gens:
                nw = mat4_mul(g, w)
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
        elements = sorted(seen)
        if len(elements) != 192:
            raise WeylError(f"|W| = {len(elements)}, expected 192")
        return elements

    def _root_perm(self, m: Mat4) -> Tuple[int, ...]:
        minv = mat4_inv(m)
        out = []
        for r in self.roots:
            img = tuple(sum(Rat(r[k]) * minv[k][j] for k in range(4))
                        for j in range(4))
            img_int = tuple(int(v) for v in img)
            if tuple(img) != tuple(Rat(v) for v in img_int) or \
                    img_int not in self.root_index:
                raise WeylError("Weyl element does not permute the roots")
            out.append(self.root_index[img_int])
        return tuple(out)

    def _inverses(self) -> List[int]:
        out = []
        for m in self.elements:
            out.append(self.element_index[mat4_inv(m)])
        return out

    # -- subsystem enumeration -------------------------------------------------

    def _enumerate_subsystems(self):
        n = 24
        idx = self.root_index
        neg = [idx[tuple(-v for v in r)] for r in self.roots]
        sum_table = [[-1] * n for _ in range(n)]
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                s = tuple(x + y for x, y in zip(a, b))
                sum_table[i][j] = idx.get(s, -1)

        def closure(mask: int) -> int:
            mask2 = mask
            for i in range(n):
                if mask & (1 << i):
                    mask2 |= 1 << neg[i]
            changed = True
            while changed:
                changed = False
                members = [i for i in range(n) if mask2 & (1 << i)]
                for i in members:
                    row = sum_table[i]
                    for j in members:
                        k = row[j]
                        if k >= 0 and not (mask2 & (1 << k)):
                            mask2 |= 1 << k
                            changed = True
            return mask2

        pos_idx = [idx[r] for r in self.positive]
        subsystems = set()
        for bits in range(1 << 12):
            mask = 0
            for t in range(12):
                if bits & (1 << t):
                    mask |= 1 << pos_idx[t]
            subsystems.add(closure(mask))

        perm_bitmaps = []
        for perm in self.perms:
            perm_bitmaps.append(perm)

        def apply_perm(mask: int, perm) -> int:
            out = 0
            for i in range(n):
                if mask & (1 << i):
                    out |= 1 << perm[i]
            return out

        # canonical form and a witness group element for each subsystem
        self.subsystem_info: Dict[int, Tuple[int, int]] = {}
        canon_class: Dict[int, List[int]] = {}
        for mask in subsystems:
            best = None
            best_w = 0
            for wi, perm in enumerate(perm_bitmaps):
                img = apply_perm(mask, perm)
                if best is None or img < best:
                    best, best_w = img, wi
            self.subsystem_info[mask] = (best, best_w)
            canon_class.setdefault(best, []).append(mask)

        # ranks, sizes, completeness per class (computed on the canon mask)
        def mask_roots(mask: int) -> List[Root]:
            return [self.roots[i] for i in range(n) if mask & (1 << i)]

        def mask_rank(mask: int) -> int:
            rs = mask_roots(mask)
            if not rs:
                return 0
            return linalg.rank([[GaussianRational(v) for v in r] for r in rs])

        def mask_complete(mask: int) -> bool:
            rs = mask_roots(mask)
            base = [[GaussianRational(v) for v in r] for r in rs]
            r0 = linalg.rank(base) if base else 0
            for i in range(n):
                if mask & (1 << i):
                    continue
                cand = [GaussianRational(v) for v in self.roots[i]]
                if not base:
                    continue
                if linalg.rank(base + [cand]) == r0:
                    return False
            return True

        # label the classes through the canonical representatives
        label_rep_mask: Dict[int, int] = {1: 0}
        for label, simple_idx in tables.FAMILY_SUBSYSTEM_SIMPLE.items():
            mask = 0
            for si in simple_idx:
                mask |= 1 << idx[self.simple[si - 1]]
            label_rep_mask[label] = closure(mask)

        self.classes: Dict[int, SubsystemClass] = {}
        canon_to_label: Dict[int, int] = {}
        for label, rep in label_rep_mask.items():
            canon = self.subsystem_info[rep][0]
            canon_to_label[canon] = label
            size = bin(rep).count("1")
            self.classes[label] = SubsystemClass(
                label=label,
                type_name=tables.FAMILY_TYPES[label],
                rep_mask=rep,
                complete=mask_complete(rep),
                size=size,
                rank=mask_rank(rep),
            )
        self.noncomplete_classes: List[SubsystemClass] = []
        for canon, members in sorted(canon_class.items()):
            if canon in canon_to_label:
                continue
            rep = canon
            cls = SubsystemClass(
                label=0,
                type_name=_type_name(bin(rep).count("1"), mask_rank(rep)),
                rep_mask=rep,
                complete=mask_complete(rep),
                size=bin(rep).count("1"),
                rank=mask_rank(rep),
            )
            self.noncomplete_classes.append(cls)
        for label, cls in self.classes.items():
            if not cls.complete:
                raise WeylError(f"labelled class {label} is not complete")
        bad = [c for c in self.noncomplete_classes if c.complete]
        if bad:
            raise WeylError("unlabelled complete subsystem class found")
        self.label_rep_mask = label_rep_mask
        self.canon_to_label = canon_to_label

    # -- public queries ---------------------------------------------------------

    def annihilator_mask(self, p: Sequence[GaussianRational]) -> int:
        mask = 0
        for k, r in enumerate(self.roots):
            val = sum((c * gr(v) for c, v in zip(p, r)), start=ZERO)
            if not val:
                mask |= 1 << k
        return mask

    def identify_family(self, p: Sequence[GaussianRational]
                        ) -> Tuple[int, Mat4]:
        """Label i and w in W with w(Phi_p) equal to the class representative."""
        mask = self.annihilator_mask(p)
        canon, w_to_canon = self.subsystem_info[mask]
        label = self.canon_to_label.get(canon)
        if label is None:
            raise WeylError("annihilator is not complete; impossible for p in h")
        rep = self.label_rep_mask[label]
        _, wrep = self.subsystem_info[rep]
        # w maps mask -> canon; wrep maps rep -> canon
        w = mat4_mul(self.elements[self.inverse[wrep]], self.elements[w_to_canon])
        return label, w

    def w_reduce(self, p: Sequence[GaussianRational], q: Sequence[GaussianRational]
                 ) -> Optional[Mat4]:
        """Some w with w*p == q, searched over all 192 elements."""
        pt = tuple(p)
        qt = tuple(q)
        for m in self.elements:
            if tuple(_apply_gr(m, pt)) == qt:
                return m
        return None

    def stabilizer_of_point(self, p: Sequence[GaussianRational]) -> List[Mat4]:
        pt = tuple(p)
        return [m for m in self.elements if tuple(_apply_gr(m, pt)) == pt]

    def subgroup_closure(self, gens: Sequence[Mat4]) -> FrozenSet[Mat4]:
        seen = {IDENTITY4}
        queue = [IDENTITY4]
        while queue:
            w = queue.pop()
            for g in gens:
                nw = mat4_mul(g, w)
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
        return frozenset(seen)

    def reflection_subgroup(self, label: int) -> FrozenSet[Mat4]:
        mask = self.label_rep_mask[label]
        gens = [self.reflections[self.roots[i]] for i in range(24)
                if mask & (1 << i)]
        if not gens:
            return frozenset({IDENTITY4})
        return self.subgroup_closure(gens)

    def normalizer(self, subgroup: FrozenSet[Mat4]) -> List[Mat4]:
        out = []
        for w in self.elements:
            winv = self.elements[self.inverse[self.element_index[w]]]
            if all(mat4_mul(mat4_mul(w, s), winv) in subgroup for s in subgroup):
                out.append(w)
        return out

    @lru_cache(maxsize=None)
    def gamma_group(self, label: int) -> GammaGroup:
        """Complement realisation of N_W(W_Psi)/W_Psi, verified against the census."""
        wpsi = self.reflection_subgroup(label)
        nw = self.normalizer(wpsi)
        expected_order = len(nw) // len(wpsi)
        if expected_order != tables.FAMILY_GAMMA_ORDERS[label]:
            raise WeylError(
                f"Gamma order mismatch at label {label}: {expected_order}")
        gens = [_mat4(g) for g in tables.GAMMA_COMPLEMENT_GENERATORS[label]]
        if label == 1:
            gens = [self.reflections[s] for s in self.simple]
        group = self.subgroup_closure(gens)
        nw_set = set(nw)
        if not all(g in nw_set for g in group):
            raise WeylError(f"complement for label {label} is not in the normaliser")
        if len(group) != expected_order:
            raise WeylError(f"complement for label {label} has wrong order")
        inter = group & wpsi
        if inter != {IDENTITY4}:
            raise WeylError(f"complement for label {label} meets W_Psi")
        return GammaGroup(label, list(gens), sorted(group), expected_order)

    def gamma_param_action(self, label: int) -> List[Tuple[Tuple[Rat, ...], ...]]:
        """The Gamma group written on the parameter tuples of the family."""
        gg = self.gamma_group(label)
        P = tables.FAMILY_PARAM_COLUMNS[label]
        k = len(P)
        if k == 0:
            return []
        cols = [[GaussianRational(v) for v in col] for col in P]
        base = [list(row) for row in zip(*cols)]  # 4 x k
        out = []
        for m in gg.elements:
            rows = []
            ok = True
            # solve P * r_j = m * P e_j for each parameter direction
            cols_r = []
            for j in range(k):
                target = _apply_gr(m, tuple(cols[j][t] for t in range(4)))
                x = linalg.solve(base, list(target))
                if x is None:
                    ok = False
                    break
                cols_r.append([c.re for c in x])
            if not ok:
                raise WeylError(f"Gamma does not preserve family {label} parameters")
            matk = tuple(tuple(cols_r[j][i] for j in range(k)) for i in range(k))
            out.append(matk)
        return sorted(set(out))


def _apply_gr(m: Mat4, v: Tuple[GaussianRational, ...]) -> Tuple[GaussianRational, ...]:
    return tuple(
        sum((GaussianRational(c) * x for c, x in zip(row, v)), start=ZERO)
        for row in m)


def _cartan_point_gr(lams):
    out = StateVector.zero()
    for lam, i in zip(lams, range(1, 5)):
        if lam:
            out = out + cartan(i).scale(lam)
    return out


def _type_name(size: int, rank: int) -> str:
    table = {(0, 0): "empty", (2, 1): "A1", (4, 2): "2A1", (6, 2): "A2",
             (6, 3): "3A1", (8, 4): "4A1", (12, 3): "A3", (24, 4): "D4"}
    return table.get((size, rank), f"size{size}rank{rank}")


@lru_cache(maxsize=1)
def get_weyl() -> WeylData:
    return WeylData()
