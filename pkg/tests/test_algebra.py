import itertools

import pytest

from slocc4 import linalg
from slocc4.algebra import (
    ALL_PERMUTATIONS, G0Element, LieElement, SL2Quad, StateVector, cartan,
    cartan_point, get_algebra,
)
from slocc4.scalars import ONE, ZERO, Rat, gr


A = get_algebra()
U = [cartan(i) for i in range(1, 5)]


def test_dimensions():
    assert len(A.basis_element(0).coords()) == 28
    assert len(G0Element.zero().coords) == 12
    assert len(StateVector.zero().amps) == 16


def test_cartan_commutes():
    for i, j in itertools.product(range(4), repeat=2):
        assert A.bracket_odd_odd(U[i], U[j]).is_zero()


def test_jacobi_all_triples():
    assert A.verify_jacobi_all() == 3276


def test_theta_and_sym4_are_automorphisms():
    A.verify_theta_automorphism()
    for sigma in ALL_PERMUTATIONS:
        A.verify_sym4_automorphism(sigma)


def test_bracket_examples():
    h1 = G0Element([ONE] + [ZERO] * 11)
    assert A.bracket_even_odd(h1, StateVector.basis("0000")) == StateVector.basis("0000")
    assert A.bracket_odd_odd(U[0], StateVector.basis("0011")).is_zero()


def test_bracket_alternating():
    x = StateVector.basis("1010") + StateVector.basis("0111").scale(gr(2, 1))
    assert A.bracket_odd_odd(x, x).is_zero()
    lie = LieElement(G0Element([gr(1)] + [ZERO] * 10 + [gr(0, 1)]), x)
    assert A.bracket(lie, lie).is_zero()


def test_ad_matrix_zero():
    assert linalg.mat_eq_zero(A.ad_matrix(LieElement.from_odd(StateVector.zero())))


def test_ad_u1_zero_multiplicity():
    cp = linalg.char_poly(A.ad_matrix_odd(U[0]))
    mult = 0
    for c in cp.coeffs:
        if c:
            break
        mult += 1
    assert mult == 10


def test_ad_nilpotent_representative():
    m = A.ad_matrix_odd(StateVector.basis("1100"))
    assert linalg.image_chain_nilpotent(m)
    assert not linalg.image_chain_nilpotent(A.ad_matrix_odd(U[0]))


def test_group_act_identity():
    x = StateVector.basis("0101") + StateVector.basis("1110").scale(gr(Rat(2, 3)))
    assert A.group_act(SL2Quad.identity(), x) == x


def test_group_act_stabilizer_examples():
    J = ((0, 1), (-1, 0))
    assert A.group_act(SL2Quad((J, J, J, J)), U[0]) == U[0]
    a = gr(2)
    D = ((a, ZERO), (ZERO, ONE / a))
    Dinv = ((ONE / a, ZERO), (ZERO, a))
    g = SL2Quad((Dinv, Dinv, D, D))
    x = cartan_point([gr(1), gr(2), gr(3), ZERO])
    assert A.group_act(g, x) == x


def test_group_act_composition():
    g = SL2Quad((((1, 1), (0, 1)), ((1, 0), (gr(0, 1), 1)),
                 ((2, 0), (0, gr(Rat(1, 2)))), ((0, 1), (-1, 0))))
    h = SL2Quad((((0, -1), (1, 0)), ((1, 2), (0, 1)),
                 ((1, 0), (3, 1)), ((gr(0, 1), 0), (0, gr(0, -1)))))
    x = cartan_point([gr(1), gr(1, 1), gr(-2), gr(Rat(1, 3))])
    assert A.group_act(g.compose(h), x) == A.group_act(g, A.group_act(h, x))


def test_group_act_equivariance_with_bracket():
    # g[a, x] = [g a g^-1, g x] for the even-odd bracket
    g = SL2Quad((((1, 1), (0, 1)), ((1, 0), (2, 1)),
                 ((0, 1), (-1, 0)), ((gr(3), 0), (0, gr(Rat(1, 3))))))
    a = G0Element([gr(1), gr(2), ZERO, ZERO, gr(0, 1), gr(1), ZERO, ZERO,
                   gr(-1), gr(1), gr(5), ZERO])
    x = StateVector.basis("0110") + StateVector.basis("1001").scale(gr(0, 1))
    lhs = A.group_act(g, A.bracket_even_odd(a, x))
    rhs = A.bracket_even_odd(A.conjugate_even(g, a), A.group_act(g, x))
    assert lhs == rhs


def test_sym4_identity_and_swaps():
    x = StateVector.basis("0110")
    assert A.sym4_act((1, 2, 3, 4), x) == x
    assert A.sym4_act((1, 3, 2, 4), U[2]) == U[3]
    assert A.sym4_act((1, 3, 2, 4), U[3]) == U[2]
    assert A.sym4_act((1, 4, 3, 2), U[1]) == U[3]
    assert A.sym4_act((1, 4, 3, 2), U[3]) == U[1]
    for sigma in ALL_PERMUTATIONS:
        assert A.sym4_act(sigma, U[0]) == U[0]


def test_sym4_permutes_u234_as_sym3():
    images = set()
    for sigma in ALL_PERMUTATIONS:
        img = tuple(A.sym4_act(sigma, u) for u in U[1:])
        for u in img:
            assert u in U[1:]
        images.add(img)
    assert len(images) == 6


def test_sl2quad_determinant_enforced():
    with pytest.raises(ValueError):
        SL2Quad((((1, 0), (0, 2)),) * 4)


def test_state_mapping_roundtrip():
    x = cartan_point([gr(1), ZERO, ZERO, gr(0, 1)])
    m = x.to_mapping()
    assert m == {"0000": "1", "1111": "1", "0011": "i", "1100": "i"}
    assert StateVector.from_mapping(m) == x
