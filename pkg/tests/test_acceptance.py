"""End-to-end acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line (shown in the terminal summary)
before asserting.
"""

import itertools
import time
from fractions import Fraction as F

from tprime import group_algebra as ga
from tprime.ideals import (InductiveSystemTrunc, admits_dimension, dagger, growth_roots, growth_sequence,
                           ideal_j_minus, ideal_j_plus, ideal_of_phi, ideal_prime_char0, ideal_schur_weyl, ideal_unit, invariant_a,
                           invariant_s, is_tprime_at, join, phi_of, phi_of_label, t_indecomposable_at)
from tprime.linalg import GF, QQ
from tprime.partitions import InfPartition, hook_shape, lr_bound_holds, partitions_of
from tprime.thoma import (ThomaParam, coherent_weight, spherical_annihilator_label, support_contains, support_level)
from tprime.verlinde import VER4_MATRIX, growth_bound_check, int_det, verp_determinant_report

I_INF_1 = InfPartition(1, (1,), 0)


def P(a, b, N, field=QQ):
    return ideal_unit(N, field) if a == b == 0 else ideal_schur_weyl(a, b, N, field)


def test_criterion_01_semiring_laws(criterion):
    start = time.time()
    N = 4
    gens = [ideal_unit(N), ideal_j_plus(N), ideal_j_minus(N), dagger(ideal_j_plus(N), ideal_j_minus(N))]
    closure = {}
    for g in gens:
        closure[g.key()] = g
    for x in gens:
        for y in gens:
            for r in (join(x, y), dagger(x, y)):
                closure.setdefault(r.key(), r)
    elems = list(closure.values())
    unit, jp = gens[0], gens[1]
    failures = []
    for x in elems:
        if join(x, jp) != x:
            failures.append("join unit")
        if dagger(x, unit) != x:
            failures.append("dagger unit")
        for y in elems:
            if join(x, y) != join(y, x) or dagger(x, y) != dagger(y, x):
                failures.append("commutativity")
            for z in elems:
                if join(join(x, y), z) != join(x, join(y, z)):
                    failures.append("join associativity")
                if dagger(dagger(x, y), z) != dagger(x, dagger(y, z)):
                    failures.append("dagger associativity")
                if join(dagger(x, y), z) != dagger(join(x, z), join(y, z)):
                    failures.append("distributivity")
    elapsed = time.time() - start
    ok = not failures and elapsed < 300
    criterion(1, ok, f"closure of {len(elems)} ideals, {len(failures)} law failures, {elapsed:.1f}s")
    assert ok


def test_criterion_02_j_minus_squared(criterion):
    results = {f.name: join(ideal_j_minus(5, f), ideal_j_minus(5, f)) == ideal_j_plus(5, f) for f in (QQ, GF(3))}
    ok = all(results.values())
    criterion(2, ok, f"J- join J- = J+ up to level 5: {results}")
    assert ok


def test_criterion_03_classification_witnesses(criterion):
    N = 4
    pairs = [(m, n) for m in range(1, N) for n in range(1, N - m + 1)]
    prime_ok = {f"P_{a}_{b}": all(is_tprime_at(ideal_schur_weyl(a, b, N), m, n) for m, n in pairs)
                for a, b in [(0, 1), (1, 0), (1, 1), (2, 0)]}
    witness = ideal_prime_char0(I_INF_1, N)
    fails_subspace = not is_tprime_at(witness, 2, 2)
    fails_lr = not t_indecomposable_at(phi_of_label(I_INF_1, N), 2, 2, QQ)
    ok = all(prime_ok.values()) and fails_subspace and fails_lr
    criterion(3, ok, f"{prime_ok}; I_(inf,1) fails at (2,2): subspace={fails_subspace}, LR={fails_lr}")
    assert ok


def test_criterion_04_polynomial_semiring(criterion):
    N = 4
    pairs = [(a, b) for a in range(3) for b in range(3) if a + b <= 2]
    bad = []
    for (a, b), (c, d) in itertools.product(pairs, repeat=2):
        if dagger(P(a, b, N), P(c, d, N)) != P(a + c, b + d, N):
            bad.append(("dagger", a, b, c, d))
        if join(P(a, b, N), P(c, d, N)) != P(a * c + b * d, a * d + b * c, N):
            bad.append(("join", a, b, c, d))
    ok = not bad
    criterion(4, ok, f"{len(pairs) ** 2} pairs checked, mismatches {bad}")
    assert ok


def test_criterion_05_growth(criterion):
    N = 5
    p11 = ideal_schur_weyl(1, 1, N)
    g = growth_sequence(p11)
    stated = [1, 2, 5, 14, 42]
    roots = growth_roots(p11)
    roots_ok = all(r <= 2 for r in roots) and all(a <= b for a, b in zip(roots, roots[1:]))
    jp_ok = growth_sequence(ideal_j_plus(N)) == [1] * N
    ok = g == stated and roots_ok and jp_ok
    criterion(5, ok, f"g_n(P_1_1) = {g} vs stated {stated}; roots bounded and monotone: {roots_ok}; "
                     f"g_n(J+) = 1: {jp_ok}")
    assert g == stated
    assert roots_ok and jp_ok


def test_criterion_06_s_and_a(criterion):
    details, ok = [], True
    for p in (2, 3, 5):
        N = min(2 * p - 1, 6)
        jp = ideal_j_plus(N, GF(p))
        s, a = invariant_s(jp), invariant_a(jp)
        ok &= s == p - 1 and a == 1
        if 2 * (p - 1) + 1 <= N:
            s2 = invariant_s(dagger(jp, jp))
            ok &= s2 == 2 * (p - 1)
            details.append(f"p={p}: s={s} a={a} s(J+dJ+)={s2}")
        else:
            details.append(f"p={p}: s={s} a={a} s(J+dJ+)=SKIP (needs N >= {2 * (p - 1) + 1}, have {N})")
    criterion(6, ok, "; ".join(details))
    assert ok


def test_criterion_07_dimension(criterion):
    N = 5
    bad = []
    for a, b in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)]:
        if not admits_dimension(ideal_schur_weyl(a, b, N), a - b):
            bad.append(("Q", a, b))
        for p in (2, 3, 5):
            I = ideal_schur_weyl(a, b, N, GF(p))
            found = [d for d in range(p) if admits_dimension(I, d)]
            if found != [(a - b) % p]:
                bad.append((p, a, b, found))
    loop_ok = all(ga.remove_strand(ga.antisymmetriser(n + 1, f), d) == ga.antisymmetriser(n, f).scale(d - n)
                  for f in (QQ, GF(3)) for n in range(1, 5) for d in range(5))
    ok = not bad and loop_ok
    criterion(7, ok, f"admittance mismatches {bad}; strand identity on a_(n+1): {loop_ok}")
    assert ok


def test_criterion_08_verlinde_determinants(criterion):
    d4 = int_det(VER4_MATRIX)
    reports = {p: verp_determinant_report(p) for p in (3, 5)}
    ok = d4 == -16 and all(r["abs_det"] == p ** (p - 2) and r["modes_agree"] for p, r in reports.items())
    signs = {p: r["det"] for p, r in reports.items()}
    criterion(8, ok, f"Ver4 det {d4}; Ver_p det {signs} (sign recorded only)")
    assert ok


def test_criterion_09_growth_bound(criterion):
    r = growth_bound_check(5, 2, 4, eps=1e-6)
    criterion(9, r["pass"], f"g = {r['g_sequence']}, max root {max(r['roots']):.6f} <= {r['bound']:.6f}")
    assert r["pass"]


def _thoma_catalog():
    values = sorted({F(k, d) for d in range(1, 5) for k in range(1, d + 1)}, reverse=True)
    out = []
    for m in range(4):
        for n in range(4 - m):
            for alpha in itertools.combinations_with_replacement(values, m):
                for beta in itertools.combinations_with_replacement(values, n):
                    if sum(alpha) + sum(beta) <= 1:
                        out.append(ThomaParam(alpha, beta))
    return out


def test_criterion_10_thoma(criterion):
    catalog = _thoma_catalog()
    bad = [(w, lam) for w in catalog for n in range(1, 6) for lam in partitions_of(n)
           if support_contains(w, lam) != (coherent_weight(w, lam) != 0)]
    w = ThomaParam((F(1, 2),), (F(1, 2),))
    label_ok = spherical_annihilator_label(w) == hook_shape(1, 1)
    N = 4
    phi = InductiveSystemTrunc(QQ, {n: support_level(w, n, "weights") for n in range(1, N + 1)})
    ideal_ok = ideal_of_phi(phi, N) == ideal_schur_weyl(1, 1, N)
    ok = not bad and label_ok and ideal_ok
    n_zero = sum(1 for x in catalog if x.gamma == 0)
    criterion(10, ok, f"{len(catalog)} parameters ({n_zero} with gamma=0), {len(bad)} mismatches; "
                      f"label {label_ok}; ideal {ideal_ok}")
    assert ok


def test_criterion_11_round_trip(criterion):
    N = 4
    ideals = {"J+": ideal_j_plus(N), "J-": ideal_j_minus(N), "P_1_1": ideal_schur_weyl(1, 1, N),
              "I_(inf,1)": ideal_prime_char0(I_INF_1, N)}
    res = {k: ideal_of_phi(phi_of(I), N) == I for k, I in ideals.items()}
    ok = all(res.values())
    criterion(11, ok, str(res))
    assert ok


def test_criterion_12_lr_bound(criterion):
    checked, bad = 0, []
    for size in range(9):
        for kappa in partitions_of(size):
            for a in range(size + 1):
                for lam in partitions_of(a):
                    for nu in partitions_of(size - a):
                        for s in range(3):
                            for t in range(3):
                                if (nu[s] if len(nu) > s else 0) > t:
                                    continue
                                checked += 1
                                if not lr_bound_holds(kappa, lam, nu, s, t):
                                    bad.append((kappa, lam, nu, s, t))
    ok = not bad
    criterion(12, ok, f"{checked} cases, {len(bad)} violations")
    assert ok
