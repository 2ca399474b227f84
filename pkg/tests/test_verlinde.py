import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tprime import group_algebra as ga
from tprime.ideals import BudgetExceeded, ideal_j_plus, is_two_sided_level, restrict_level
from tprime.linalg import GF
from tprime.verlinde import (VER4_MATRIX, VER4_ONE, VER4_P, VER4_V, RepCpObject, Ver4Object, a_shortcut,
                             brute_force_centralizer, centralizer_positions, cp_tensor_decompose,
                             cp_tensor_decompose_direct, growth_bound_check, int_det, negligible_ideal,
                             negligible_kernel_level, negligible_kernel_level_brute, NegligibleContext,
                             projective_dimension, tensor_power, ver4_fusion, ver4_x_invariants,
                             verp_determinant_report, verp_fusion, verp_x_matrix)


def W(p, *blocks):
    return RepCpObject(p, blocks)


def objects(p, max_dim=5):
    return st.lists(st.integers(1, p), min_size=1, max_size=3).filter(lambda b: sum(b) <= max_dim).map(
        lambda b: RepCpObject(p, tuple(b)))


def test_object_validation():
    with pytest.raises(ValueError):
        W(4, 1)
    with pytest.raises(ValueError):
        W(3, 4)
    assert str(W(3, 1, 3)) == "W3 + W1"


def test_tensor_examples():
    assert cp_tensor_decompose(W(3, 2), W(3, 2)) == W(3, 3, 1)
    assert cp_tensor_decompose(W(3, 3), W(3, 2)) == W(3, 3, 3)
    assert cp_tensor_decompose(W(5, 1), W(5, 4)) == W(5, 4)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tensor_matches_direct_kron(p):
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            assert cp_tensor_decompose(W(p, a), W(p, b)) == cp_tensor_decompose_direct(W(p, a), W(p, b))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(objects(p), objects(p), objects(p))))
def test_tensor_laws(xyz):
    x, y, z = xyz
    p = x.p
    xy = cp_tensor_decompose(x, y)
    assert xy == cp_tensor_decompose(y, x)
    assert xy.dim == x.dim * y.dim
    assert cp_tensor_decompose(xy, z) == cp_tensor_decompose(x, cp_tensor_decompose(y, z))
    assert cp_tensor_decompose(x, W(p, 1)) == x
    # projectives form a tensor ideal
    assert projective_dimension(cp_tensor_decompose(W(p, p), x)) == p * x.dim


def test_projective_dimension_examples():
    assert projective_dimension(W(5, 5)) == 5
    assert projective_dimension(W(3, 2)) == 0
    assert projective_dimension(tensor_power(W(3, 2), 3)) == 6


def test_a_shortcut():
    assert a_shortcut(W(3, 2)) == 2
    assert a_shortcut(W(5, 3)) == 3
    assert a_shortcut(W(3, 3)) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_verp_fusion_is_tensor_modulo_projectives(p):
    for i in range(1, p):
        for j in range(1, p):
            t = cp_tensor_decompose(W(p, i), W(p, j)).multiplicities()
            t.pop(p, None)
            assert verp_fusion(i, j, p) == t


def test_x_matrix_examples():
    assert verp_x_matrix(3, "oracle") == [[1, 2], [2, 1]]
    assert verp_x_matrix(3, "closed") == [[1, 2], [2, 1]]
    for p in (3, 5):
        assert verp_x_matrix(p, "closed") == verp_x_matrix(p, "oracle")


@pytest.mark.parametrize("p", [3, 5, 7])
def test_determinant_abs(p):
    r = verp_determinant_report(p)
    assert r["abs_det"] == p ** (p - 2)
    assert r["modes_agree"]


def test_ver4():
    assert int_det(VER4_MATRIX) == -16
    assert ver4_x_invariants(VER4_ONE) == (1, 2, 4)
    assert ver4_x_invariants(VER4_V) == (2, 4, 4)
    assert ver4_x_invariants(VER4_P) == (4, 4, 8)
    assert ver4_fusion(VER4_V, VER4_V) == VER4_P
    assert ver4_fusion(VER4_ONE, VER4_P) == VER4_P
    seen = {}
    for l in range(4):
        for m in range(4):
            for n in range(4):
                key = ver4_x_invariants(Ver4Object(l, m, n))
                assert key not in seen
                seen[key] = (l, m, n)
    with pytest.raises(ValueError):
        Ver4Object(-1, 0, 0)


def test_centralizer_positions_count():
    # dim End_{C_p}(W_a + W_b) = sum of min(a, b) over ordered block pairs
    for sizes in ([1], [2, 1], [3, 3, 1], [2, 2]):
        expected = sum(min(a, b) for a in sizes for b in sizes)
        assert len(centralizer_positions(sizes)) == expected


@pytest.mark.parametrize("p,blocks,n", [(3, (2,), 1), (3, (2,), 2), (3, (2,), 3), (2, (2,), 2), (2, (2,), 3),
                                        (5, (2,), 3), (5, (3,), 2), (3, (2, 1), 2), (5, (4,), 2)])
def test_negligible_kernel_vs_brute_force(p, blocks, n):
    x = W(p, *blocks)
    assert negligible_kernel_level(x, n) == negligible_kernel_level_brute(x, n, budget=16)


def test_negligible_kernel_examples():
    dims = [negligible_kernel_level(W(3, 2), n).dim for n in range(1, 5)]
    assert dims == [0, 1, 5, 23]
    ctx = NegligibleContext(W(3, 2), 3)
    assert ctx.is_negligible(ga.antisymmetriser(3, GF(3)))
    assert not NegligibleContext(W(3, 2), 2).is_negligible(ga.antisymmetriser(2, GF(3)))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_trivial_object_gives_j_plus(p):
    assert negligible_ideal(W(p, 1), 4) == ideal_j_plus(4, GF(p))


@pytest.mark.parametrize("p,j", [(3, 2), (5, 2), (5, 3)])
def test_negligible_kernel_is_compatible_ideal(p, j):
    x = W(p, j)
    levels = [negligible_kernel_level(x, n) for n in range(1, 5)]
    for n, lev in enumerate(levels, start=1):
        assert is_two_sided_level(lev, n)
        if n > 1:
            assert restrict_level(lev, n - 1) == levels[n - 2]


@pytest.mark.parametrize("p,j", [(3, 2), (5, 2), (5, 3), (5, 4)])
def test_antisymmetriser_shortcut_vs_oracle(p, j):
    x = W(p, j)
    for n in range(1, 5):
        inside = NegligibleContext(x, n).is_negligible(ga.antisymmetriser(n, GF(p)))
        assert inside == (n > a_shortcut(x))


def test_budget():
    with pytest.raises(BudgetExceeded):
        NegligibleContext(W(5, 4), 5, budget=100)
    with pytest.raises(BudgetExceeded):
        brute_force_centralizer(W(3, 2), 5)


def test_growth_bound():
    r = growth_bound_check(5, 2, 4)
    assert r["pass"]
    assert r["bound"] == pytest.approx(math.sin(2 * math.pi / 5) / math.sin(math.pi / 5))
    assert Fraction(r["g_sequence"][0]) == 1
