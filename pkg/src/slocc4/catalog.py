"""Queryable catalog of every classification table: representatives,
stabiliser descriptors, and the class census (87 orbit classes, 27 classes
under qubit permutations).

Representatives come straight from the embedded tables; stabiliser identity
components are parametrised samplers so that self-checks can evaluate them
at several exact parameter values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import tables
from .algebra import (
    SL2Quad, StateVector, cartan_point, get_algebra,
)
from .scalars import ONE, ZERO, GaussianRational, Rat, gr


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitClassLabel:
    """The classification verdict at the SL(2,C)^4 level."""

    kind: str                                  # nilpotent | semisimple | mixed
    family: Optional[int] = None               # 1..11 for semisimple/mixed
    orbit: Optional[int] = None                # 1..31 for nilpotent
    j: Optional[int] = None                    # mixed nilpotent-part index
    parameters: Tuple[GaussianRational, ...] = ()

    def key(self) -> Tuple:
        return (self.kind, self.family, self.orbit, self.j)

    def __str__(self):
        if self.kind == "nilpotent":
            return f"nilpotent/{self.orbit}"
        if self.kind == "semisimple":
            ps = ",".join(str(p) for p in self.parameters)
            return f"semisimple/{self.family}[{ps}]"
        ps = ",".join(str(p) for p in self.parameters)
        return f"mixed/{self.family}.{self.j}[{ps}]"


@dataclass
class StabilizerDescriptor:
    source: str                                # table row reference
    identity_component_dim: int
    identity_sampler: Optional[Callable[..., SL2Quad]]
    sampler_arity: int
    sampler_domain: str                        # description of valid samples
    component_generators: List[SL2Quad]


# ---------------------------------------------------------------------------
# the named shorthand matrices of the stabiliser rows


def _m(entries) -> Tuple[Tuple[GaussianRational, GaussianRational], ...]:
    return tuple(tuple(x if isinstance(x, GaussianRational) else gr(x)
                       for x in row) for row in entries)


MAT_I = _m(((1, 0), (0, 1)))
MAT_J = _m(((0, 1), (-1, 0)))
MAT_K = _m(((0, gr(0, 1)), (gr(0, 1), 0)))
MAT_L = _m(((gr(0, 1), 0), (0, gr(0, -1))))        # L = D(i)


def mat_D(u, v=None):
    u = u if isinstance(u, GaussianRational) else gr(u)
    if not u:
        raise CatalogError("D(u, v) needs invertible u")
    v = ZERO if v is None else (v if isinstance(v, GaussianRational) else gr(v))
    return _m(((u, ZERO), (v, ONE / u)))


def mat_Lv(v):
    return mat_D(ONE, v)


def mat_M(a, b):
    a = a if isinstance(a, GaussianRational) else gr(a)
    b = b if isinstance(b, GaussianRational) else gr(b)
    if a * a - b * b != ONE:
        raise CatalogError("M(a, b) requires a^2 - b^2 = 1")
    return _m(((a, b), (b, a)))


def _neg(m):
    return tuple(tuple(-x for x in row) for row in m)


def _tp(m):
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def _inv2(m):
    a, b = m[0]
    c, d = m[1]
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


def _sharp(m):
    a, b = m[0]
    c, d = m[1]
    return ((d, c), (b, a))


_NAMED = {"I": MAT_I, "-I": _neg(MAT_I), "J": MAT_J, "-J": _neg(MAT_J),
          "K": MAT_K, "L": MAT_L, "-L": _neg(MAT_L)}


def quad_from_names(names: Sequence[str]) -> SL2Quad:
    return SL2Quad(tuple(_NAMED[n] for n in names))


# ---------------------------------------------------------------------------
# identity-component samplers, one per distinct table row shape
# (argument conventions follow the table entries; every returned quad is
# verified against its representative by stabilizer_selfcheck)

def _quad(*ms):
    return SL2Quad(ms)


_IDENTITY_SAMPLERS: Dict[str, Tuple[int, str, Callable]] = {
    "trivial": (0, "none", lambda: SL2Quad.identity()),
    # semisimple family 2: (D(a)^-1, D(a)^-1, D(a), D(a))
    "d_iid_a": (1, "units", lambda a: _quad(
        mat_D(ONE / a), mat_D(ONE / a), mat_D(a), mat_D(a))),
    # semisimple family 3: (A#, A#, A, A)
    "sharp_AA": (3, "sl2", lambda a, b, c: _sharp_quad_AA(a, b, c)),
    # semisimple family 4: (D(a)^-1, D(a), D(b)^-1, D(b))
    "d_abab": (2, "units2", lambda a, b: _quad(
        mat_D(ONE / a), mat_D(a), mat_D(ONE / b), mat_D(b))),
    # semisimple family 5: (D(a)^-1, D(b)^-1, D(a), D(b))
    "d_aabb": (2, "units2", lambda a, b: _quad(
        mat_D(ONE / a), mat_D(ONE / b), mat_D(a), mat_D(b))),
    # semisimple family 6: (D(a)^-1, D(b), D(b)^-1, D(a))
    "d_abba": (2, "units2", lambda a, b: _quad(
        mat_D(ONE / a), mat_D(b), mat_D(ONE / b), mat_D(a))),
    # semisimple families 7-9: (A#, A, B#, B) up to the factor pairing
    "sharp_AB_12_34": (6, "sl2pair", lambda A, B: _quad(
        _sharp(A), A, _sharp(B), B)),
    "sharp_AB_13_24": (6, "sl2pair", lambda A, B: _quad(
        _sharp(A), _sharp(B), A, B)),
    "sharp_AB_14_23": (6, "sl2pair", lambda A, B: _quad(
        _sharp(A), B, _sharp(B), A)),
    # semisimple family 10: (D(abc)^-1, D(a), D(b), D(c))
    "d_torus3": (3, "units3", lambda a, b, c: _quad(
        mat_D(ONE / (a * b * c)), mat_D(a), mat_D(b), mat_D(c))),
    # nilpotent N2: (D(b^-1 c d, a'), D(b, b'), D(c, c')^T, D(d, d')^T)
    "nilz_n2": (7, "nilz_n2", lambda ap, b, bp, c, cp, d, dp: _quad(
        mat_D(c * d / b, ap), mat_D(b, bp), _tp(mat_D(c, cp)), _tp(mat_D(d, dp)))),
    # nilpotent N3: (B^-T, B, D(d^-1, c')^T, D(d, d')^T)
    "nilz_n3": (6, "nilz_n3", lambda B, d, cp, dp: _quad(
        _tp(_inv2(B)), B, _tp(mat_D(ONE / d, cp)), _tp(mat_D(d, dp)))),
    # nilpotent N4: (L(b'+c'+d')^-1, L(b'), L(c')^T, L(d')^T)
    "nilz_n4": (3, "affine3", lambda bp, cp, dp: _quad(
        _inv2(mat_Lv(bp + cp + dp)), mat_Lv(bp), _tp(mat_Lv(cp)), _tp(mat_Lv(dp)))),
    # nilpotent N5: (D(b)^-1, D(b), L(d')^-T, L(d')^T)
    "nilz_n5": (2, "unit_affine", lambda b, dp: _quad(
        mat_D(ONE / b), mat_D(b), _tp(_inv2(mat_Lv(dp))), _tp(mat_Lv(dp)))),
    # nilpotent N6: (D(d^-1, -(b'+d')), D(d^-1, b'), D(d^-1, c')^T, D(d, d')^T)
    "nilz_n6": (4, "nilz_n6", lambda b_, c_, d_, dp: _quad(
        mat_D(ONE / d_, -(b_ + dp)), mat_D(ONE / d_, b_),
        _tp(mat_D(ONE / d_, c_)), _tp(mat_D(d_, dp)))),
    # nilpotent N8, usually stated as (L(a'), I, L(a')^T, L(a')^T); the algebra forces
    # the inverse on the first factor (compare the N4 row), which is the
    # one-parameter group actually centralising the orbit-23 representative
    "nilz_n8": (1, "affine", lambda ap: _quad(
        _inv2(mat_Lv(ap)), MAT_I, _tp(mat_Lv(ap)), _tp(mat_Lv(ap)))),
    # nilpotent N9: (M(c,d)^-1 M(a,b)^-1, M(c,d), L(u)^T, M(a,b))
    "nilz_n9": (3, "nilz_n9", lambda a, b, c, d, u: _quad(
        _mat2_mul(_inv2(mat_M(c, d)), _inv2(mat_M(a, b))),
        mat_M(c, d), _tp(mat_Lv(u)), mat_M(a, b))),
    # mixed-class rows
    "mt_31": (1, "affine", lambda ap: _quad(
        _tp(mat_Lv(ap)), _tp(mat_Lv(ap)), mat_Lv(ap), mat_Lv(ap))),
    "mt_43": (1, "units", lambda a: _quad(
        mat_D(ONE / a), mat_D(a), mat_D(ONE / a), mat_D(a))),
    "mt_71": (1, "affine", lambda ap: _quad(
        _inv2(mat_Lv(ap)), _tp(_inv2(mat_Lv(ap))), _tp(mat_Lv(ap)), mat_Lv(ap))),
    "mt_74": (2, "affine_unit", lambda ap, b: _quad(
        mat_Lv(ap), _tp(mat_Lv(ap)), mat_D(ONE / b), mat_D(b))),
    "mt_76": (3, "mt_76", lambda a, bp, cp: _quad(
        mat_D(ONE / a, cp), _tp(mat_D(a, cp)), _tp(mat_D(ONE / a, bp)),
        mat_D(a, bp))),
    "mt_102": (1, "units", lambda a: _quad(
        mat_D(ONE / a), mat_D(ONE / a), mat_D(a), mat_D(a))),
    "mt_105": (2, "units2", lambda a, b: _quad(
        mat_D(ONE / a), mat_D(ONE / b), mat_D(b), mat_D(a))),
}


def _mat2_mul(m, n):
    return ((m[0][0] * n[0][0] + m[0][1] * n[1][0],
             m[0][0] * n[0][1] + m[0][1] * n[1][1]),
            (m[1][0] * n[0][0] + m[1][1] * n[1][0],
             m[1][0] * n[0][1] + m[1][1] * n[1][1]))


def _sharp_quad_AA(a, b, c):
    """(A#, A#, A, A) for A = [[a, b], [c, (1+bc)/a]] (needs a != 0)."""
    A = ((a, b), (c, (ONE + b * c) / a))
    return _quad(_sharp(A), _sharp(A), A, A)


_SAMPLER_POINTS: Dict[str, List[Tuple]] = {
    "none": [()],
    "units": [(gr(2),), (gr(3),), (gr(Rat(1, 2)),), (gr(0, 1),)],
    "units2": [(gr(2), gr(3)), (gr(3), gr(Rat(1, 2))), (gr(0, 1), gr(2)),
               (gr(5), gr(5))],
    "units3": [(gr(2), gr(3), gr(5)), (gr(2), gr(2), gr(Rat(1, 3))),
               (gr(0, 1), gr(2), gr(-3))],
    "sl2": [(gr(1), gr(2), gr(3)), (gr(2), gr(-1), gr(1)),
            (gr(0, 1), gr(1), gr(1))],
    "sl2pair": [
        ((( gr(1), gr(2)), (gr(3), gr(7))), ((gr(1), gr(0)), (gr(5), gr(1)))),
        (((gr(2), gr(1)), (gr(1), gr(1))), ((gr(0), gr(1)), (gr(-1), gr(0)))),
        (((gr(1), gr(0, 1)), (gr(0), gr(1))), ((gr(3), gr(2)), (gr(4), gr(3)))),
    ],
    "affine": [(gr(1),), (gr(-2),), (gr(0, 1),), (ZERO,)],
    "affine3": [(gr(1), gr(2), gr(3)), (ZERO, gr(1), gr(-1)),
                (gr(0, 1), gr(2), ZERO)],
    "unit_affine": [(gr(2), gr(1)), (gr(3), ZERO), (gr(0, 1), gr(-2))],
    "affine_unit": [(gr(1), gr(2)), (ZERO, gr(3)), (gr(0, 1), gr(Rat(1, 2)))],
    "nilz_n2": [(gr(1), gr(2), ZERO, gr(3), gr(1), gr(5), ZERO),
                (ZERO, gr(1), gr(1), gr(1), gr(2), gr(2), gr(3)),
                (gr(0, 1), gr(2), gr(-1), gr(3), ZERO, gr(Rat(1, 2)), gr(1))],
    "nilz_n3": [((( gr(1), gr(2)), (gr(3), gr(7))), gr(2), gr(1), ZERO),
                (((gr(0), gr(1)), (gr(-1), gr(0))), gr(3), ZERO, gr(1)),
                (((gr(1), gr(0)), (gr(0, 1), gr(1))), gr(Rat(1, 2)), gr(2), gr(3))],
    "nilz_n6": [(gr(1), gr(2), gr(3), ZERO), (ZERO, gr(1), gr(2), gr(1)),
                (gr(0, 1), ZERO, gr(Rat(1, 2)), gr(-1))],
    # N9 side constraints a^2 = 1 + b^2 and c^2 = 1 + d^2: rational points
    "nilz_n9": [(gr(1), ZERO, gr(1), ZERO, ZERO),
                (gr(Rat(5, 4)), gr(Rat(3, 4)), gr(1), ZERO, gr(2)),
                (gr(Rat(5, 4)), gr(Rat(3, 4)), gr(Rat(13, 12)), gr(Rat(5, 12)),
                 gr(0, 1))],
    "mt_76": [(gr(2), gr(1), ZERO), (gr(3), ZERO, gr(1)),
              (gr(0, 1), gr(2), gr(-1))],
}


# ---------------------------------------------------------------------------
# representatives


def nilpotent_representative(orbit: int) -> StateVector:
    for number, states, _, _ in tables.NILPOTENT_ORBITS:
        if number == orbit:
            out = StateVector.zero()
            for bits in states:
                out = out + StateVector.basis(bits)
            return out
    raise CatalogError(f"no nilpotent orbit {orbit}")


def nilpotent_sclass(orbit: int) -> Tuple[str, str]:
    for number, _, nfam, dfam in tables.NILPOTENT_ORBITS:
        if number == orbit:
            return nfam, dfam
    raise CatalogError(f"no nilpotent orbit {orbit}")


def mixed_nilpotent_part(i: int, j: int) -> StateVector:
    try:
        states = tables.NIJ[i][j - 1]
    except (KeyError, IndexError):
        raise CatalogError(f"no nilpotent part n_{{{i},{j}}}") from None
    out = StateVector.zero()
    for bits in states:
        out = out + StateVector.basis(bits)
    return out


def mixed_sclass(i: int, j: int) -> Tuple[str, str]:
    if i in tables.SYM_REDUCTION:
        i = tables.SYM_REDUCTION[i][0]
    return tables.MIXED_PART_SCLASS[(i, j)]


def mixed_counts() -> Dict[int, int]:
    return {i: len(v) for i, v in tables.NIJ.items()}


def family_parameter_count(label: int) -> int:
    return len(tables.FAMILY_PARAM_COLUMNS[label])


def check_family_constraints(label: int, params: Sequence[GaussianRational]) -> None:
    """The column-5 membership conditions; raises naming the violation."""
    k = family_parameter_count(label)
    if len(params) != k:
        raise CatalogError(f"family {label} takes {k} parameters")
    if any(not p for p in params):
        raise CatalogError(f"family {label} requires nonzero parameters")
    p = list(params)
    if label == 1:
        for s2 in (1, -1):
            for s3 in (1, -1):
                for s4 in (1, -1):
                    if p[0] == s2 * p[1] + s3 * p[2] + s4 * p[3]:
                        raise CatalogError(
                            "family 1 requires l1 not in {±l2±l3±l4}")
    elif label == 2:
        for s2 in (1, -1):
            for s3 in (1, -1):
                if p[0] == s2 * p[1] + s3 * p[2]:
                    raise CatalogError("family 2 requires l1 not in {±l2±l3}")
    elif label == 3:
        if p[0] == -p[1]:
            raise CatalogError("family 3 requires l1 != -l2")
    elif label in (4, 5, 6):
        if p[0] == p[1] or p[0] == -p[1]:
            raise CatalogError(f"family {label} requires l1 != ±l2")


def semisimple_representative(label: int,
                              params: Sequence[GaussianRational]) -> StateVector:
    check_family_constraints(label, params)
    cols = tables.FAMILY_PARAM_COLUMNS[label]
    out = StateVector.zero()
    for lam, col in zip(params, cols):
        out = out + cartan_point([gr(v) for v in col]).scale(lam)
    return out


def representative(label: OrbitClassLabel) -> StateVector:
    if label.kind == "nilpotent":
        return nilpotent_representative(label.orbit)
    if label.kind == "semisimple":
        return semisimple_representative(label.family, label.parameters)
    if label.kind == "mixed":
        s = semisimple_representative(label.family, label.parameters)
        return s + mixed_nilpotent_part(label.family, label.j)
    raise CatalogError(f"unknown kind {label.kind!r}")


def sclass_of(label: OrbitClassLabel) -> Tuple[str, str]:
    if label.kind == "nilpotent":
        return nilpotent_sclass(label.orbit)
    if label.kind == "semisimple":
        return ("S", "D1")
    return mixed_sclass(label.family, label.j)


def sclass_nilpotent_rep(name: str) -> StateVector:
    if name not in tables.SCLASS_NILPOTENT_REPS:
        raise CatalogError(f"unknown S-level nilpotent {name!r}")
    return StateVector.from_mapping(tables.SCLASS_NILPOTENT_REPS[name])


# ---------------------------------------------------------------------------
# stabiliser descriptors


def stabilizer_of(label: OrbitClassLabel) -> StabilizerDescriptor:
    if label.kind == "semisimple":
        if label.family not in tables.SEMISIMPLE_STABILIZERS:
            raise CatalogError(f"no stabiliser row for family {label.family}")
        dim, tag, gens = tables.SEMISIMPLE_STABILIZERS[label.family]
        return _descriptor(f"semisimple family {label.family}", dim, tag, gens)
    if label.kind == "nilpotent":
        nfam, _ = nilpotent_sclass(label.orbit)
        if nfam == "N1":  # the zero state: the stabiliser is the whole group
            return _descriptor("zero state (N1)", 12, "trivial", ())
        orbit_of_row, dim, tag, gens = tables.NILPOTENT_STABILIZERS[nfam]
        src = f"nilpotent S-family {nfam} (orbit {orbit_of_row})"
        if label.orbit != orbit_of_row:
            src += f"; conjugate carrier for orbit {label.orbit}"
        return _descriptor(src, dim, tag, gens)
    key = (label.family, label.j)
    if label.family in tables.SYM_REDUCTION:
        key = (tables.SYM_REDUCTION[label.family][0], label.j)
    if key in tables.MIXED_STABILIZERS:
        dfam, dim, tag, gens = tables.MIXED_STABILIZERS[key]
        return _descriptor(f"mixed class {key[0]},{key[1]} ({dfam})",
                           dim, tag, gens)
    # the mixed table lists one row per (reduced family, D-class); map through it
    nfam, dfam = mixed_sclass(label.family, label.j)
    for (fi, fj), (df, dim, tag, gens) in tables.MIXED_STABILIZERS.items():
        if fi == key[0] and df == dfam:
            return _descriptor(
                f"mixed class {fi},{fj} ({dfam}); conjugate carrier for "
                f"{label.family},{label.j}", dim, tag, gens)
    raise CatalogError(f"no stabiliser row for {label}")


def _descriptor(src, dim, tag, gens) -> StabilizerDescriptor:
    arity, domain, sampler = _IDENTITY_SAMPLERS[tag]
    return StabilizerDescriptor(
        source=src,
        identity_component_dim=dim,
        identity_sampler=sampler,
        sampler_arity=arity,
        sampler_domain=domain,
        component_generators=[quad_from_names(g) for g in gens],
    )


def identity_component_samples(desc: StabilizerDescriptor) -> List[SL2Quad]:
    if desc.sampler_arity == 0:
        return [desc.identity_sampler()]
    return [desc.identity_sampler(*pt)
            for pt in _SAMPLER_POINTS[desc.sampler_domain][:3]]


# ---------------------------------------------------------------------------
# census


DEFAULT_FAMILY_PARAMS: Dict[int, Tuple[GaussianRational, ...]] = {
    1: (gr(2), gr(3), gr(4), gr(7)),
    2: (gr(1), gr(2), gr(4)),
    3: (gr(1), gr(2)),
    4: (gr(1), gr(2)),
    5: (gr(1), gr(2)),
    6: (gr(1), gr(2)),
    7: (gr(1),),
    8: (gr(1),),
    9: (gr(1),),
    10: (gr(1),),
}


def all_g0_labels(params: Optional[Dict[int, Tuple]] = None) -> List[OrbitClassLabel]:
    """The 87 classes: 31 nilpotent, 10 semisimple, 46 mixed."""
    params = params or DEFAULT_FAMILY_PARAMS
    out = []
    for orbit, _, _, _ in tables.NILPOTENT_ORBITS:
        out.append(OrbitClassLabel("nilpotent", orbit=orbit))
    for fam in range(1, 11):
        out.append(OrbitClassLabel("semisimple", family=fam,
                                   parameters=params[fam]))
    for fam, parts in sorted(tables.NIJ.items()):
        for j in range(1, len(parts) + 1):
            out.append(OrbitClassLabel("mixed", family=fam, j=j,
                                       parameters=params[fam]))
    return out


def all_s_classes() -> List[Tuple[str, str]]:
    """The 27 classes: 9 nilpotent, 6 semisimple, 12 mixed rows."""
    out = []
    for name in sorted(tables.SCLASS_NILPOTENT_REPS):
        out.append(("nilpotent", name))
    for fam in sorted(tables.SCLASS_PARAM_GROUPS):
        out.append(("semisimple", f"family {fam}"))
    for (fi, fj), (dfam, _, _, _) in sorted(tables.MIXED_STABILIZERS.items()):
        out.append(("mixed", f"s+n_{{{fi},{fj}}} ({dfam})"))
    return out


def census() -> Dict[str, int]:
    g0 = all_g0_labels()
    kinds = {"nilpotent": 0, "semisimple": 0, "mixed": 0}
    for lab in g0:
        kinds[lab.kind] += 1
    return {
        "g0_total": len(g0),
        "g0_nilpotent": kinds["nilpotent"],
        "g0_semisimple": kinds["semisimple"],
        "g0_mixed": kinds["mixed"],
        "s_total": len(all_s_classes()),
        "s_nilpotent": len(tables.SCLASS_NILPOTENT_REPS),
        "s_semisimple": len(tables.SCLASS_PARAM_GROUPS),
        "s_mixed": len(tables.MIXED_STABILIZERS),
    }


# ---------------------------------------------------------------------------
# self-checks


def stabilizer_representative(label: OrbitClassLabel) -> StateVector:
    """The representative the stabiliser row is stated for."""
    if label.kind == "nilpotent":
        nfam, _ = nilpotent_sclass(label.orbit)
        orbit_of_row = tables.NILPOTENT_STABILIZERS[nfam][0]
        return nilpotent_representative(orbit_of_row)
    return representative(label)


def stabilizer_selfcheck(verbose: bool = False) -> List[Tuple[str, bool]]:
    """Every table generator and sampled identity element fixes its state."""
    A = get_algebra()
    results = []

    def check(src: str, x: StateVector, desc: StabilizerDescriptor):
        ok = True
        for g in desc.component_generators:
            if A.group_act(g, x) != x:
                ok = False
        for g in identity_component_samples(desc):
            if A.group_act(g, x) != x:
                ok = False
        results.append((src, ok))

    # semisimple stabiliser rows at several parameter choices per family
    for fam in range(1, 11):
        desc = stabilizer_of(OrbitClassLabel("semisimple", family=fam,
                                             parameters=DEFAULT_FAMILY_PARAMS[fam]))
        for params in _family_param_samples(fam):
            x = semisimple_representative(fam, params)
            check(f"semisimple stabiliser row {fam} at {tuple(str(p) for p in params)}", x, desc)

    # nilpotent stabiliser rows against their stated orbit representatives
    for nfam, (orbit, dim, tag, gens) in sorted(tables.NILPOTENT_STABILIZERS.items()):
        desc = _descriptor(f"nilpotent stabiliser {nfam}", dim, tag, gens)
        x = nilpotent_representative(orbit)
        check(f"nilpotent stabiliser {nfam} (orbit {orbit})", x, desc)

    # mixed-class rows at several semisimple parameter choices
    for (fi, fj), (dfam, dim, tag, gens) in sorted(tables.MIXED_STABILIZERS.items()):
        desc = _descriptor(f"mixed stabiliser {fi},{fj}", dim, tag, gens)
        for params in _family_param_samples(fi):
            x = (semisimple_representative(fi, params)
                 + mixed_nilpotent_part(fi, fj))
            check(f"mixed stabiliser s+n_{{{fi},{fj}}} at {tuple(str(p) for p in params)}",
                  x, desc)
    return results


def _family_param_samples(fam: int) -> List[Tuple[GaussianRational, ...]]:
    base = {
        1: [(gr(2), gr(3), gr(4), gr(7)), (gr(1), gr(2), gr(4), gr(8)),
            (gr(0, 1), gr(3), gr(5), gr(9))],
        2: [(gr(1), gr(2), gr(4)), (gr(2), gr(3), gr(7)),
            (gr(0, 1), gr(2), gr(4))],
        3: [(gr(1), gr(2)), (gr(2), gr(5)), (gr(0, 1), gr(1))],
        4: [(gr(1), gr(2)), (gr(2), gr(5)), (gr(0, 1), gr(3))],
        5: [(gr(1), gr(2)), (gr(2), gr(5)), (gr(0, 1), gr(3))],
        6: [(gr(1), gr(2)), (gr(2), gr(5)), (gr(0, 1), gr(3))],
        7: [(gr(1),), (gr(3),), (gr(0, 1),)],
        8: [(gr(1),), (gr(3),), (gr(0, 1),)],
        9: [(gr(1),), (gr(3),), (gr(0, 1),)],
        10: [(gr(1),), (gr(3),), (gr(0, 1),)],
    }
    return base[fam]
