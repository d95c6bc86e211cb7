import pytest

from slocc4 import tables
from slocc4.algebra import StateVector, cartan, get_algebra
from slocc4.catalog import (
    CatalogError, DEFAULT_FAMILY_PARAMS, OrbitClassLabel, all_g0_labels,
    all_s_classes, census, sclass_nilpotent_rep, identity_component_samples,
    mixed_counts, mixed_nilpotent_part, mixed_sclass, nilpotent_representative,
    representative, sclass_of, semisimple_representative, stabilizer_of,
    stabilizer_selfcheck,
)
from slocc4.jordan import centralizer, is_nilpotent
from slocc4.scalars import gr

A = get_algebra()


def test_census_counts():
    c = census()
    assert c["g0_total"] == 87
    assert (c["g0_nilpotent"], c["g0_semisimple"], c["g0_mixed"]) == (31, 10, 46)
    assert c["s_total"] == 27
    assert (c["s_nilpotent"], c["s_semisimple"], c["s_mixed"]) == (9, 6, 12)
    assert mixed_counts() == {2: 1, 3: 2, 4: 4, 5: 4, 6: 4, 7: 6, 8: 6,
                              9: 6, 10: 13}
    assert len(all_g0_labels()) == 87
    assert len(all_s_classes()) == 27


def test_representative_examples():
    assert nilpotent_representative(1) == StateVector.basis("1100")
    assert semisimple_representative(10, (gr(1),)) == cartan(1)
    lab = OrbitClassLabel("mixed", family=10, j=13, parameters=(gr(1),))
    assert representative(lab) == cartan(1) + StateVector.basis("0011")
    assert nilpotent_representative(31).is_zero()


def test_constraint_violations_are_named():
    with pytest.raises(CatalogError, match="nonzero"):
        semisimple_representative(10, (gr(0),))
    with pytest.raises(CatalogError, match="±l2±l3"):
        semisimple_representative(2, (gr(3), gr(1), gr(2)))
    with pytest.raises(CatalogError, match="l1 != -l2"):
        semisimple_representative(3, (gr(2), gr(-2)))
    with pytest.raises(CatalogError, match="±l2"):
        semisimple_representative(4, (gr(2), gr(-2)))


def test_stabilizer_examples():
    desc = stabilizer_of(OrbitClassLabel("semisimple", family=10,
                                         parameters=(gr(1),)))
    assert desc.identity_component_dim == 3
    assert len(desc.component_generators) == 1  # (J,J,J,J)
    J = ((0, 1), (-1, 0))
    from slocc4.algebra import SL2Quad
    assert desc.component_generators[0] == SL2Quad((J, J, J, J))

    desc = stabilizer_of(OrbitClassLabel("nilpotent", orbit=27))
    assert desc.identity_component_dim == 0
    assert len(desc.component_generators) == 3

    desc = stabilizer_of(OrbitClassLabel("mixed", family=2, j=1,
                                         parameters=(gr(1), gr(2), gr(4))))
    assert desc.identity_component_dim == 0
    assert len(desc.component_generators) == 3


def test_stabilizer_selfcheck_all_rows():
    rows = stabilizer_selfcheck()
    assert len(rows) >= 70
    bad = [name for name, ok in rows if not ok]
    assert not bad, bad


def test_identity_component_dims_match_centralizers():
    for fam in range(1, 11):
        s = semisimple_representative(fam, DEFAULT_FAMILY_PARAMS[fam])
        assert centralizer(s).dim_even == tables.SEMISIMPLE_STABILIZER_DIMS[fam - 1], fam


def test_nilz_identity_dims_match_centralizers():
    for nfam, (orbit, dim, _, _) in tables.NILPOTENT_STABILIZERS.items():
        ci = centralizer(nilpotent_representative(orbit))
        assert ci.dim_even == dim, (nfam, ci.dim_even, dim)


def test_mt_identity_dims_match_centralizers():
    for (fi, fj), (_, dim, _, _) in tables.MIXED_STABILIZERS.items():
        x = semisimple_representative(fi, DEFAULT_FAMILY_PARAMS[fi]) + \
            mixed_nilpotent_part(fi, fj)
        ci = centralizer(x)
        assert ci.dim_even == dim, ((fi, fj), ci.dim_even, dim)


def test_nilpotent_parts_of_reduced_families_are_swap_images():
    for i, (base, sigma) in tables.SYM_REDUCTION.items():
        for j in range(len(tables.NIJ[base])):
            assert A.sym4_act(sigma, mixed_nilpotent_part(base, j + 1)) == \
                mixed_nilpotent_part(i, j + 1)


def test_all_31_representatives_are_nilpotent():
    for orbit in range(1, 31):
        assert is_nilpotent(nilpotent_representative(orbit)), orbit


def test_sclass_assignments():
    assert sclass_of(OrbitClassLabel("nilpotent", orbit=1)) == ("N2", "D2")
    assert mixed_sclass(10, 1) == ("N6", "D6")
    assert mixed_sclass(5, 1) == mixed_sclass(4, 1) == ("N3", "D3")
    assert mixed_sclass(9, 6) == mixed_sclass(7, 6) == ("N2", "D2")


def test_djokovic_representatives_are_nilpotent():
    for name in sorted(tables.SCLASS_NILPOTENT_REPS):
        x = sclass_nilpotent_rep(name)
        if name == "N1":
            assert x.is_zero()
        else:
            assert is_nilpotent(x), name


def test_identity_samples_satisfy_their_constraints():
    # every sampler point must build a valid determinant-1 quadruple
    seen = set()
    for lab in all_g0_labels():
        desc = stabilizer_of(lab)
        if desc.sampler_domain in seen:
            continue
        seen.add(desc.sampler_domain)
        quads = identity_component_samples(desc)
        assert quads, desc.source
