from fractions import Fraction as F

import pytest

from tprime.ideals import InductiveSystemTrunc, ideal_of_phi, ideal_schur_weyl, phi_of_label
from tprime.linalg import QQ
from tprime.partitions import ZERO_LABEL, InfPartition, add_box, hook_dimension, hook_shape, partitions_of
from tprime.thoma import (InadmissibleError, ThomaParam, YoungDistribution, adm_annihilator_label,
                          coherent_weight, path_ratio_error, spherical_annihilator_label, support_contains,
                          support_level, support_path_step, thoma_character, validate_admissible)

HALF, QUARTER = F(1, 2), F(1, 4)
SAMPLES = [ThomaParam(), ThomaParam((HALF,)), ThomaParam((HALF,), (HALF,)), ThomaParam((HALF, HALF)),
           ThomaParam((HALF, QUARTER), (QUARTER,)), ThomaParam((), (F(1, 3),) * 3), ThomaParam((QUARTER,), ())]


def test_param_validation():
    assert ThomaParam((HALF,), (HALF,)).gamma == 0
    assert ThomaParam((QUARTER,)).gamma == F(3, 4)
    with pytest.raises(ValueError):
        ThomaParam((F(3, 4),), (HALF,))
    with pytest.raises(ValueError):
        ThomaParam((QUARTER, HALF))
    assert ThomaParam.from_json(ThomaParam((HALF,), (QUARTER,)).to_json()) == ThomaParam((HALF,), (QUARTER,))


def test_character_values():
    w = ThomaParam((HALF,), (HALF,))
    assert thoma_character(w, (1, 1)) == 1
    assert thoma_character(w, (2,)) == 0
    assert thoma_character(w, (3,)) == F(1, 4)


def test_weight_examples():
    assert coherent_weight(ThomaParam((HALF, HALF)), (1, 1, 1)) == 0
    w = ThomaParam((HALF,), (HALF,))
    for lam in [(3,), (2, 1), (1, 1, 1)]:
        assert coherent_weight(w, lam) > 0


@pytest.mark.parametrize("w", SAMPLES)
def test_weights_form_probability_distributions(w):
    for n in range(1, 6):
        ws = [coherent_weight(w, l) for l in partitions_of(n)]
        assert all(x >= 0 for x in ws)
        assert sum(ws) == 1


@pytest.mark.parametrize("w", SAMPLES)
def test_coherence(w):
    for n in range(1, 5):
        for lam in partitions_of(n):
            rhs = sum(coherent_weight(w, mu) * F(hook_dimension(lam), hook_dimension(mu)) for mu in add_box(lam))
            assert coherent_weight(w, lam) == rhs


def test_support_examples():
    w = ThomaParam((QUARTER,), ())
    assert all(support_contains(w, l) for n in range(1, 6) for l in partitions_of(n))
    assert not support_contains(ThomaParam((HALF,), (HALF,)), (2, 2))
    assert coherent_weight(ThomaParam((HALF,), (HALF,)), (2, 2)) == 0
    assert support_contains(ThomaParam((HALF, HALF)), (4, 2))
    assert coherent_weight(ThomaParam((HALF, HALF)), (4, 2)) > 0


@pytest.mark.parametrize("w", SAMPLES)
def test_support_label_vs_weights(w):
    for n in range(1, 6):
        assert support_level(w, n, "label") == support_level(w, n, "weights")


def test_spherical_labels():
    assert spherical_annihilator_label(ThomaParam((HALF,))) == ZERO_LABEL
    assert spherical_annihilator_label(ThomaParam((HALF,), (HALF,))) == hook_shape(1, 1)
    assert spherical_annihilator_label(ThomaParam((F(1, 3),) * 3)) == hook_shape(3, 0)


@pytest.mark.parametrize("a,b", [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)])
def test_spherical_ideal_is_schur_weyl(a, b):
    w = ThomaParam((F(1, a + b),) * a, (F(1, a + b),) * b)
    N = 4
    phi = InductiveSystemTrunc(QQ, {n: support_level(w, n) for n in range(1, N + 1)})
    assert phi == phi_of_label(spherical_annihilator_label(w), N)
    assert ideal_of_phi(phi, N) == ideal_schur_weyl(a, b, N)


def test_validate_admissible():
    empty = YoungDistribution({})
    assert validate_admissible(ThomaParam((HALF,)), empty, empty)
    assert validate_admissible(ThomaParam((HALF, HALF)), YoungDistribution({HALF: (1, 1)}),
                               YoungDistribution({0: (2,)}))
    assert not validate_admissible(ThomaParam((HALF,)), YoungDistribution({HALF: (1, 1)}),
                                   YoungDistribution({0: (2,)}))
    assert not validate_admissible(ThomaParam((HALF,)), YoungDistribution({0: (1,)}), empty)


def test_adm_labels():
    w = ThomaParam((HALF,), (HALF,))
    empty = YoungDistribution({})
    assert adm_annihilator_label(w, empty, empty) == (hook_shape(1, 1), hook_shape(1, 1))
    assert adm_annihilator_label(ThomaParam((HALF,)), YoungDistribution({0: (1,)}),
                                 YoungDistribution({0: (1,)})) == (ZERO_LABEL, ZERO_LABEL)
    left, right = adm_annihilator_label(w, YoungDistribution({0: (2,)}), YoungDistribution({0: (1, 1)}))
    assert left == InfPartition(1, (3,), 1)
    assert right == InfPartition(1, (2, 2), 1)
    with pytest.raises(InadmissibleError):
        adm_annihilator_label(w, YoungDistribution({HALF: (1, 1)}), YoungDistribution({0: (2,)}))


def test_adm_label_degenerates_to_spherical():
    empty = YoungDistribution({})
    for w in SAMPLES:
        assert adm_annihilator_label(w, empty, empty) == (spherical_annihilator_label(w),) * 2


@pytest.mark.parametrize("alpha,beta", [((HALF,), (HALF,)), ((HALF, QUARTER), (QUARTER,)),
                                        ((F(1, 3),) * 3, ()), ((HALF, HALF), ())])
def test_support_path_ratios(alpha, beta):
    w = ThomaParam(alpha, beta)
    m, n = len(alpha), len(beta)
    for r in (40, 100, 400):
        lam = support_path_step(w, r)
        assert lam.size == r
        assert support_contains(w, lam)
        assert path_ratio_error(w, lam) <= F((m + 1) * (n + 1), r)
