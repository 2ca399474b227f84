import math

import flint
import pytest

from tprime import group_algebra as ga
from tprime.ideals import annihilator_of_modules
from tprime.linalg import GF, QQ
from tprime.partitions import Partition, hook_dimension, is_p_regular, lr_coefficient, partitions_of
from tprime.rep import (RelationError, RepnAction, annihilator_subspace, brauer_constituents, character_table,
                        character_table_csv, character_value, class_size, coset_representatives, coset_split,
                        induced_action, modular_simple, polytabloid, regular_quotient_action,
                        restriction_multiplicity, sign_action, specht_action, standard_tableaux,
                        superspace_action, superspace_weight_actions, tensor_action, trivial_action)


def test_relations_checked():
    two = QQ.matrix([[0, 1], [1, 0]])
    RepnAction(2, QQ, 2, [two])
    with pytest.raises(RelationError):
        RepnAction(3, QQ, 2, [two, QQ.matrix([[1, 0], [0, -1]])])


@pytest.mark.parametrize("lam,p,dim", [((3,), 3, 1), ((2, 1), 3, 1), ((2, 1), 5, 2), ((2, 1), 2, 2),
                                       ((4,), 2, 1), ((3, 1), 2, 2)])
def test_modular_simple_dims(lam, p, dim):
    assert modular_simple(lam, p).dim == dim


def test_modular_simple_rejects_singular():
    with pytest.raises(ValueError):
        modular_simple((1, 1, 1), 3)


def _gram_rank(lam, p):
    # independent route: polytabloid dot products, rank over F_p
    n = sum(lam)
    polys = [polytabloid(t, n) for t in standard_tableaux(lam)]
    k = len(polys)
    entries = [sum(pa.get(key, 0) * b for key, b in pb.items()) % p for pa in polys for pb in polys]
    return flint.nmod_mat(k, k, entries, p).rank()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_modular_simple_gram_oracle(p):
    for n in range(1, 6):
        for lam in partitions_of(n):
            if is_p_regular(lam, p):
                assert modular_simple(lam, p).dim == _gram_rank(lam, p)


def test_specht_dimension_and_characters():
    for n in range(1, 6):
        for lam in partitions_of(n):
            act = specht_action(lam)
            assert act.dim == hook_dimension(lam)
            for s in ga.all_perms(n):
                assert act.trace(s) == character_value(lam, ga.cycle_type(s))


def test_character_identity_is_hook_count():
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert character_value(lam, (1,) * n) == hook_dimension(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    simples, classes, table = character_table(n)
    for j, c in enumerate(classes):
        for k, d in enumerate(classes):
            s = sum(table[i][j] * table[i][k] for i in range(len(simples)))
            expected = math.factorial(n) // class_size(tuple(c)) if j == k else 0
            assert s == expected


def test_character_table_csv():
    text = character_table_csv(3)
    assert text.splitlines()[0].startswith("lambda")


def test_regular_module_constituents():
    reg = regular_quotient_action(3, QQ)
    assert brauer_constituents(reg) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    reg3 = regular_quotient_action(3, GF(3))
    mult = brauer_constituents(reg3)
    assert sum(m * modular_simple(l, 3).dim for l, m in mult.items()) == 6
    assert mult == {(3,): 3, (2, 1): 3}
    assert brauer_constituents(trivial_action(4, GF(2))) == {(4,): 1}


def test_annihilator_examples():
    assert annihilator_subspace(trivial_action(2)).dim == 1
    assert annihilator_subspace(regular_quotient_action(3, QQ)).dim == 0
    assert annihilator_subspace(specht_action((2, 1))).dim == 2


def test_annihilator_wedderburn_count():
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert annihilator_subspace(specht_action(lam)).dim == math.factorial(n) - hook_dimension(lam) ** 2


@pytest.mark.parametrize("kappa,lam,mu,expected", [((3,), (2,), (1,), 1), ((2, 1), (1,), (1, 1), 1),
                                                  ((3, 2, 1), (2, 1), (2, 1), 2)])
def test_restriction_multiplicity_examples(kappa, lam, mu, expected):
    assert restriction_multiplicity(kappa, lam, mu) == expected


def test_restriction_multiplicity_vs_lr():
    for n in range(2, 7):
        for a in range(1, n):
            for kappa in partitions_of(n):
                for lam in partitions_of(a):
                    for mu in partitions_of(n - a):
                        assert restriction_multiplicity(kappa, lam, mu) == lr_coefficient(kappa, lam, mu)


def test_restriction_multiplicity_modular_sanity():
    # dimension count over F_3: sum of multiplicities times dimensions
    p = 3
    for kappa in partitions_of(4):
        if not is_p_regular(kappa, p):
            continue
        total = 0
        for lam in partitions_of(2):
            for mu in partitions_of(2):
                if is_p_regular(lam, p) and is_p_regular(mu, p):
                    total += restriction_multiplicity(kappa, lam, mu, GF(p)) * \
                        modular_simple(lam, p).dim * modular_simple(mu, p).dim
        assert total == modular_simple(kappa, p).dim


def test_induced_trivial():
    ind = induced_action(trivial_action(1), trivial_action(1))
    assert ind.dim == 2
    assert brauer_constituents(ind) == {(2,): 1, (1, 1): 1}


def test_induced_matches_lr():
    for lam, mu in [((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,)), ((2,), (2,)), ((2, 1), (2,))]:
        ind = induced_action(specht_action(lam), specht_action(mu))
        ind.check_relations()
        n = sum(lam) + sum(mu)
        expected = {k: c for k in partitions_of(n) if (c := lr_coefficient(k, lam, mu))}
        assert brauer_constituents(ind) == expected


def test_coset_split():
    for n in range(1, 5):
        for i in range(n + 1):
            reps = coset_representatives(n, i)
            assert len(reps) == math.comb(n, i)
            for s in ga.all_perms(n):
                c, u, w = coset_split(s, i)
                assert c in reps
                assert ga.compose(c, ga.shift_concat(u, w)) == s


def test_superspace_examples():
    assert superspace_action(1, 0, 3).dim == 1
    sgn = superspace_action(0, 1, 3)
    for s in ga.all_perms(3):
        assert sgn.trace(s) == ga.sign(s)
    assert superspace_action(1, 1, 2).trace((1, 0)) == 0


def test_superspace_character():
    for m in range(3):
        for n in range(3):
            if m + n == 0 or m + n > 3:
                continue
            for i in range(1, 5):
                act = superspace_action(m, n, i)
                for s in ga.all_perms(i):
                    expected = math.prod(m + (-1) ** (k - 1) * n for k in ga.cycle_type(s))
                    assert act.trace(s) == expected


def test_superspace_weight_spaces_annihilator():
    for m, n, i in [(1, 1, 3), (2, 1, 3), (1, 2, 2)]:
        parts = superspace_weight_actions(m, n, i)
        ann = annihilator_subspace(superspace_action(m, n, i))
        assert annihilator_of_modules(i, QQ, parts) == ann


def test_tensor_with_sign_transposes():
    for lam in partitions_of(4):
        t = tensor_action(specht_action(lam), sign_action(4))
        assert brauer_constituents(t) == {Partition(lam).transpose(): 1}


def test_json_roundtrip():
    act = modular_simple((2, 1), 5)
    back = RepnAction.from_json(act.to_json())
    assert [g == h for g, h in zip(back.gens, act.gens)] == [True, True]
