import random

import pytest

from slocc4 import linalg
from slocc4.algebra import StateVector, cartan, cartan_point, get_algebra
from slocc4.catalog import (
    DEFAULT_FAMILY_PARAMS, mixed_nilpotent_part, semisimple_representative,
)
from slocc4.jordan import centralizer, is_nilpotent, jordan_decompose
from slocc4.poly import squarefree_part, uni_gcd
from slocc4.scalars import ZERO, gr

A = get_algebra()


def test_semisimple_input():
    jp = jordan_decompose(cartan(1))
    assert jp.s == cartan(1) and jp.n.is_zero()


def test_nilpotent_input():
    e = StateVector.basis("1100")
    jp = jordan_decompose(e)
    assert jp.s.is_zero() and jp.n == e


def test_mixed_example():
    x = cartan(1) + StateVector.basis("0011")
    jp = jordan_decompose(x)
    assert jp.s == cartan(1)
    assert jp.n == StateVector.basis("0011")


@pytest.mark.parametrize("fam,j", [(2, 1), (3, 2), (4, 1), (7, 6), (10, 5),
                                   (10, 9), (5, 2), (8, 4), (9, 1), (6, 3)])
def test_mixed_roundtrip_samples(fam, j):
    s = semisimple_representative(fam, DEFAULT_FAMILY_PARAMS[fam])
    n = mixed_nilpotent_part(fam, j)
    jp = jordan_decompose(s + n)
    assert jp.s == s and jp.n == n
    # both parts stay inside the odd space by construction; check commuting
    assert A.bracket_odd_odd(jp.s, jp.n).is_zero()


def test_is_nilpotent_examples():
    assert is_nilpotent(StateVector.basis("1100"))
    assert not is_nilpotent(cartan(1))
    assert is_nilpotent(StateVector.zero())


def test_nilpotent_charpoly_is_t28():
    m = A.ad_matrix_odd(StateVector.basis("1100") + StateVector.basis("0000"))
    cp = linalg.char_poly(m)
    assert cp.degree() == 28
    assert all(not cp.coeffs[k] for k in range(28))


def test_semisimple_minimal_polynomial_squarefree():
    m = A.ad_matrix_odd(cartan_point([gr(2), gr(3), gr(4), gr(7)]))
    chi = linalg.char_poly(m)
    f = squarefree_part(chi)
    assert uni_gcd(f, f.derivative()).degree() == 0
    assert linalg.mat_eq_zero(linalg.poly_at_matrix(f, m))


def test_centralizer_dims_examples():
    assert centralizer(cartan(1)).dims() == (10, 3, 7, 9)
    generic = cartan_point([gr(2), gr(3), gr(4), gr(7)])
    assert centralizer(generic).dims() == (4, 0, 4, 0)
    assert centralizer(cartan_point([gr(1), gr(-1), ZERO, ZERO])).derived_dim == 15


def test_centralizer_even_dim_is_half_the_subsystem():
    # dim z_{g0}(s) = |Pi_i| / 2 on every family
    from slocc4.weyl import get_weyl
    W = get_weyl()
    for fam in range(1, 11):
        s = semisimple_representative(fam, DEFAULT_FAMILY_PARAMS[fam])
        size = W.classes[fam].size
        assert centralizer(s).dim_even == size // 2, fam
    assert centralizer(StateVector.zero()).dim == 28


def test_centralizer_basis_brackets_to_zero():
    x = cartan(1) + StateVector.basis("0110")
    ci = centralizer(x)
    lie_x = None
    from slocc4.algebra import LieElement
    lie_x = LieElement.from_odd(x)
    for b in ci.basis:
        assert A.bracket(lie_x, b).is_zero()


def test_nilpotency_tests_agree_on_random_states():
    rng = random.Random(5)
    for _ in range(40):
        amps = [gr(rng.randrange(-2, 3), rng.randrange(-2, 3))
                if rng.random() < 0.5 else ZERO for _ in range(16)]
        is_nilpotent(StateVector(amps))  # raises JordanError on disagreement


def test_jordan_of_scaled_catalog_states():
    s = semisimple_representative(4, (gr(1), gr(2)))
    n = mixed_nilpotent_part(4, 2)
    g = gr(0, 1)
    jp = jordan_decompose((s + n).scale(g))
    assert jp.s == s.scale(g) and jp.n == n.scale(g)
