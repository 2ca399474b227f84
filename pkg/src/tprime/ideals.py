"""Truncated two-sided ideals of k S_infinity.

An ideal is carried as its intersections with k S_1, ..., k S_N, each a
Subspace in canonical permutation coordinates.  Products, membership and
the two semiring operations act levelwise.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import group_algebra as ga
from .linalg import QQ, Field, Subspace, left_kernel
from .partitions import (InfPartition, Partition, contains, is_p_regular, partitions_lex)
from .rep import (RepnAction, annihilator_subspace, brauer_constituents, coset_representatives, coset_split,
                  modular_simple, regular_quotient_action, restriction_multiplicity, superspace_weight_actions)

EXACT = "EXACT"
UPPER_APPROX = "UPPER_APPROX"


class BudgetExceeded(RuntimeError):
    """A computation would exceed the configured size budget."""


@dataclass(frozen=True)
class Overflow:
    """The defining witness did not occur within the truncation; the true
    value is at least ``lower_bound``."""

    lower_bound: int

    def __str__(self):
        return f">={self.lower_bound}"

    def to_json(self):
        return {"overflow": True, "lower_bound": self.lower_bound}


class TruncatedIdeal:
    """Levels I_1..I_N of a two-sided ideal of k S_infinity."""

    def __init__(self, field: Field, levels, exact=None, provenance: str = ""):
        self.field = field
        self.levels: tuple[Subspace, ...] = tuple(levels)
        self.N = len(self.levels)
        if self.N < 1:
            raise ValueError("need at least one level")
        for n, lev in enumerate(self.levels, start=1):
            if lev.ambient != math.factorial(n) or lev.field != field:
                raise ValueError(f"level {n} lives in the wrong space")
        if exact is None:
            exact = [True] * self.N
        self.exact: tuple[bool, ...] = tuple(bool(e) for e in exact)
        self.provenance = provenance

    def level(self, n: int) -> Subspace:
        if not 1 <= n <= self.N:
            raise IndexError(f"level {n} outside 1..{self.N}")
        return self.levels[n - 1]

    def quotient_dim(self, n: int) -> int:
        """dim k S_n / I_n.  Level 0 is k S_0 = k with I_0 = 0 for every
        ideal, which makes the unit ideal neutral for dagger."""
        if n == 0:
            return 1
        return self.level(n).codim

    @property
    def all_exact(self) -> bool:
        return all(self.exact)

    def key(self):
        return (self.field.characteristic, tuple(l.key() for l in self.levels))

    def same_levels(self, other: "TruncatedIdeal") -> bool:
        """Levelwise equality of subspaces (flags and provenance ignored)."""
        return self.field == other.field and self.N == other.N and self.key() == other.key()

    def __eq__(self, other):
        return isinstance(other, TruncatedIdeal) and self.same_levels(other)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        dims = [l.dim for l in self.levels]
        return f"TruncatedIdeal({self.provenance or '?'}, {self.field!r}, dims={dims})"

    def truncate(self, N: int) -> "TruncatedIdeal":
        return TruncatedIdeal(self.field, self.levels[:N], self.exact[:N], self.provenance)

    def contains_element(self, x: ga.GroupAlgebraElement) -> bool:
        return self.level(x.degree).contains(x.to_vector())

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "field": self.field.name,
            "N": self.N,
            "provenance": self.provenance,
            "levels": [{"n": n, "exact": e, "dim": lev.dim, "basis": [[fmt(v) for v in row] for row in lev.rows]}
                       for n, (lev, e) in enumerate(zip(self.levels, self.exact), start=1)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data) -> "TruncatedIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        field = Field.parse(data["field"])
        levels, exact = [], []
        for item in sorted(data["levels"], key=lambda d: d["n"]):
            n = int(item["n"])
            rows = [[field.parse_scalar(v) for v in row] for row in item["basis"]]
            levels.append(Subspace(field, math.factorial(n), rows))
            exact.append(bool(item.get("exact", True)))
        if len(levels) != int(data["N"]):
            raise ValueError("level count does not match N")
        return cls(field, levels, exact, data.get("provenance", ""))


def _weakest(*ideals) -> list[bool]:
    N = ideals[0].N
    return [all(I.exact[n] for I in ideals) for n in range(N)]


def _check_compatible(I: TruncatedIdeal, J: TruncatedIdeal):
    if I.field != J.field:
        raise ValueError("ideals live over different fields")
    if I.N != J.N:
        raise ValueError(f"truncation levels differ: {I.N} vs {J.N}")


# --- annihilators of families of modules ----------------------------------

def annihilator_of_modules(n: int, field: Field, actions) -> Subspace:
    """Intersection of annihilators = annihilator of the direct sum."""
    actions = [a for a in actions if a.dim]
    size = math.factorial(n)
    if not actions:
        return Subspace.full(field, size)
    mats = [a.all_matrices() for a in actions]
    rows = []
    for k in range(size):
        row = []
        for ms in mats:
            row.extend(ms[k].entries())
        rows.append(row)
    return Subspace(field, size, left_kernel(field, rows, len(rows[0])))


@lru_cache(maxsize=None)
def simple_annihilator(lam: tuple, p: int, n: int | None = None) -> Subspace:
    """Ann of D^lam (Specht module in characteristic 0), restricted to S_n."""
    act = modular_simple(lam, p)
    if n is not None and n != act.degree:
        act = act.restrict(n)
    return annihilator_subspace(act)


# --- constructors ---------------------------------------------------------

def ideal_unit(N: int, field: Field = QQ) -> TruncatedIdeal:
    return TruncatedIdeal(field, [Subspace.full(field, math.factorial(n)) for n in range(1, N + 1)],
                          provenance="unit")


def ideal_zero(N: int, field: Field = QQ) -> TruncatedIdeal:
    return TruncatedIdeal(field, [Subspace.zero(field, math.factorial(n)) for n in range(1, N + 1)],
                          provenance="zero")


def _character_kernel(n: int, field: Field, signed: bool) -> Subspace:
    # kernel of the 1-dim character: span of sigma - chi(sigma) * id
    one = field.one
    size = math.factorial(n)
    rows = []
    for k, p in enumerate(ga.all_perms(n)):
        if k == 0:
            continue
        r = [field.zero] * size
        r[k] = one
        r[0] = -field(ga.sign(p)) if signed else -one
        rows.append(r)
    return Subspace(field, size, rows)


def ideal_j_plus(N: int, field: Field = QQ) -> TruncatedIdeal:
    """Annihilator of the trivial representation (augmentation kernel)."""
    return TruncatedIdeal(field, [_character_kernel(n, field, False) for n in range(1, N + 1)],
                          provenance="j_plus")


def ideal_j_minus(N: int, field: Field = QQ) -> TruncatedIdeal:
    """Annihilator of the sign representation."""
    return TruncatedIdeal(field, [_character_kernel(n, field, True) for n in range(1, N + 1)],
                          provenance="j_minus")


def label_partitions(lam: InfPartition, n: int) -> list[Partition]:
    """Partitions of n contained in the infinite shape lam."""
    return [mu for mu in partitions_lex(n) if contains(lam, mu)]


def ideal_prime_char0(lam: InfPartition, N: int) -> TruncatedIdeal:
    """Intersection of Ann D^mu over mu inside lam, levelwise, over Q."""
    if not isinstance(lam, InfPartition):
        raise TypeError("ideal_prime_char0 needs an InfPartition label")
    levels = []
    for n in range(1, N + 1):
        acts = [modular_simple(mu, 0) for mu in label_partitions(lam, n)]
        levels.append(annihilator_of_modules(n, QQ, acts))
    return TruncatedIdeal(QQ, levels, provenance=f"prime_char0:{json.dumps(lam.to_json(), sort_keys=True)}")


def ideal_schur_weyl(m: int, n_odd: int, N: int, field: Field = QQ) -> TruncatedIdeal:
    """Kernel of the signed permutation action on tensor powers of an
    m|n_odd dimensional super vector space."""
    if m + n_odd < 1:
        raise ValueError("need m + n_odd >= 1")
    levels = [annihilator_of_modules(i, field, superspace_weight_actions(m, n_odd, i, field))
              for i in range(1, N + 1)]
    return TruncatedIdeal(field, levels, provenance=f"schur_weyl:{m},{n_odd}")


# --- semiring operations --------------------------------------------------

def _quotient_rows(I: TruncatedIdeal, n: int) -> list:
    """Quotient coordinates of every permutation of degree n (n = 0 allowed)."""
    if n == 0:
        return [[I.field.one]]
    return I.level(n).quotient_matrix()


def _vec_kron(u, v):
    return [a * b for a in u for b in v]


def join_level(I: TruncatedIdeal, J: TruncatedIdeal, n: int) -> Subspace:
    """Preimage of I_n (x) kS_n + kS_n (x) J_n under sigma -> sigma (x) sigma."""
    field = I.field
    size = math.factorial(n)
    gi, gj = I.quotient_dim(n), J.quotient_dim(n)
    if gi * gj == 0:
        return Subspace.full(field, size)
    qi, qj = _quotient_rows(I, n), _quotient_rows(J, n)
    rows = [_vec_kron(qi[k], qj[k]) for k in range(size)]
    return Subspace(field, size, left_kernel(field, rows, gi * gj))


def dagger_level(I: TruncatedIdeal, J: TruncatedIdeal, n: int) -> Subspace:
    """Intersection over i of the annihilators of the induced modules
    Ind (kS_i/I_i (x) kS_{n-i}/J_{n-i}).

    Each induced module is the cyclic module kS_n / L_i with L_i the left
    ideal generated by I_i . kS + kS . J_{n-i}; x kills it iff x c lies in
    L_i for every minimal coset representative c.  The image of x c is read
    off in the coset basis, and all i are stacked into one kernel.
    """
    field = I.field
    size = math.factorial(n)
    perms = ga.all_perms(n)
    rows = [[] for _ in range(size)]
    for i in range(n + 1):
        gi, gj = I.quotient_dim(i), J.quotient_dim(n - i)
        if gi * gj == 0:
            continue
        qi, qj = _quotient_rows(I, i), _quotient_rows(J, n - i)
        idx_i, idx_j = ga.perm_index(i), ga.perm_index(n - i)
        reps = coset_representatives(n, i)
        pos = {c: k for k, c in enumerate(reps)}
        nr = len(reps)
        block = gi * gj
        zero = field.zero
        for k, s in enumerate(perms):
            seg = [zero] * (nr * nr * block)
            for a, c in enumerate(reps):
                c2, u, w = coset_split(ga.compose(s, c), i)
                off = (a * nr + pos[c2]) * block
                seg[off:off + block] = _vec_kron(qi[idx_i[u]], qj[idx_j[w]])
            rows[k].extend(seg)
    if not rows[0]:
        return Subspace.full(field, size)
    return Subspace(field, size, left_kernel(field, rows, len(rows[0])))


_OP_CACHE: dict = {}


def _cached(op: str, I: TruncatedIdeal, J: TruncatedIdeal, fn):
    key = (op, I.key(), J.key())
    hit = _OP_CACHE.get(key)
    if hit is None:
        hit = fn()
        _OP_CACHE[key] = hit
    return hit


def join(I: TruncatedIdeal, J: TruncatedIdeal) -> TruncatedIdeal:
    """The ideal of the tensor product of the quotient modules."""
    _check_compatible(I, J)
    levels = _cached("join", I, J, lambda: tuple(join_level(I, J, n) for n in range(1, I.N + 1)))
    return TruncatedIdeal(I.field, levels, _weakest(I, J), f"join({I.provenance},{J.provenance})")


def dagger(I: TruncatedIdeal, J: TruncatedIdeal) -> TruncatedIdeal:
    """The ideal of the induction (direct-sum) product of the quotient modules."""
    _check_compatible(I, J)
    levels = _cached("dagger", I, J, lambda: tuple(dagger_level(I, J, n) for n in range(1, I.N + 1)))
    return TruncatedIdeal(I.field, levels, _weakest(I, J), f"dagger({I.provenance},{J.provenance})")


def dagger_power(I: TruncatedIdeal, k: int) -> TruncatedIdeal:
    """I dagger ... dagger I (k factors); k = 0 gives the unit ideal."""
    out = ideal_unit(I.N, I.field)
    for _ in range(k):
        out = dagger(out, I)
    return out


def ideal_p(m: int, n: int, N: int, field: Field = QQ) -> TruncatedIdeal:
    """J_+^{dagger m} dagger J_-^{dagger n}, the dagger-side description of
    the Schur-Weyl kernel for superdimension m|n."""
    out = dagger(dagger_power(ideal_j_plus(N, field), m), dagger_power(ideal_j_minus(N, field), n))
    out.provenance = f"dagger_p:{m},{n}"
    return out


# --- structural checks ----------------------------------------------------

def _right_mult_coords(n: int, s: tuple) -> list[int]:
    idx = ga.perm_index(n)
    return [idx[ga.compose(p, s)] for p in ga.all_perms(n)]


def _left_mult_coords(n: int, s: tuple) -> list[int]:
    idx = ga.perm_index(n)
    return [idx[ga.compose(s, p)] for p in ga.all_perms(n)]


def is_two_sided_level(sub: Subspace, n: int) -> bool:
    """Closure under left and right multiplication by adjacent transpositions."""
    for g in range(1, n):
        s = ga.adjacent_transposition(n, g)
        for perm_map in (_left_mult_coords(n, s), _right_mult_coords(n, s)):
            for row in sub.rows:
                img = [sub.field.zero] * len(row)
                for k, v in enumerate(row):
                    if v != 0:
                        img[perm_map[k]] = v
                if not sub.contains(img):
                    return False
    return True


def restrict_level(sub: Subspace, n: int) -> Subspace:
    """sub (a subspace of kS_{n+1}) intersected with kS_n, in S_n coordinates."""
    field = sub.field
    embedded = [ga.perm_index(n + 1)[ga.embed_perm(p, n + 1)] for p in ga.all_perms(n)]
    inter = sub & Subspace.coordinate(field, sub.ambient, embedded)
    return Subspace(field, math.factorial(n), [[row[k] for k in embedded] for row in inter.rows])


def check_two_sided(I: TruncatedIdeal) -> bool:
    return all(is_two_sided_level(I.level(n), n) for n in range(1, I.N + 1))


def check_compatibility(I: TruncatedIdeal, strict: bool = True) -> bool:
    """I_n = I_{n+1} cap kS_n (strict) or only the inclusion (not strict)."""
    for n in range(1, I.N):
        below = restrict_level(I.level(n + 1), n)
        if strict and below != I.level(n):
            return False
        if not strict and not I.level(n).issubset(below):
            return False
    return True


# --- predicates -----------------------------------------------------------

def young_product_space(I: TruncatedIdeal, m: int, n: int) -> Subspace:
    """I_m . kS_n + kS_m . I_n inside kS_{m+n}."""
    field = I.field
    idx = ga.perm_index(m + n)
    size = math.factorial(m + n)
    rows = []
    pm, pn = ga.all_perms(m), ga.all_perms(n)
    for row in I.level(m).rows:
        for t in pn:
            v = [field.zero] * size
            for k, c in enumerate(row):
                if c != 0:
                    v[idx[ga.shift_concat(pm[k], t)]] = c
            rows.append(v)
    for row in I.level(n).rows:
        for s in pm:
            v = [field.zero] * size
            for k, c in enumerate(row):
                if c != 0:
                    v[idx[ga.shift_concat(s, pn[k])]] = c
            rows.append(v)
    return Subspace(field, size, rows)


def is_tprime_at(I: TruncatedIdeal, m: int, n: int) -> bool:
    """Whether I_{m+n} meets k(S_m x S_n) exactly in I_m . kS_n + kS_m . I_n."""
    if m < 1 or n < 1 or m + n > I.N:
        raise IndexError(f"(m, n) = ({m}, {n}) outside the truncation N = {I.N}")
    idx = ga.perm_index(m + n)
    young = [idx[ga.shift_concat(s, t)] for s in ga.all_perms(m) for t in ga.all_perms(n)]
    lhs = I.level(m + n) & Subspace.coordinate(I.field, math.factorial(m + n), young)
    return lhs == young_product_space(I, m, n)


def admits_dimension(I: TruncatedIdeal, delta) -> bool:
    """Whether removing the last strand (closed loops counted as delta) maps
    I_{n+1} into I_n for every n < N."""
    field = I.field
    for n in range(1, I.N):
        target = I.level(n)
        for row in I.level(n + 1).rows:
            if not target.contains(ga.remove_strand_vector(field, n + 1, row, delta)):
                return False
    return True


def admissible_dimensions(I: TruncatedIdeal) -> list[int]:
    """All residues delta in F_p admitted by I (prime fields only)."""
    if I.field.characteristic == 0:
        raise ValueError("exhaustive scan needs a finite field")
    return [d for d in range(I.field.characteristic) if admits_dimension(I, d)]


# --- invariants -----------------------------------------------------------

def invariant_d(I: TruncatedIdeal):
    """Largest n with I_n = 0."""
    last = 0
    for n in range(1, I.N + 1):
        if I.level(n).dim == 0:
            last = n
        else:
            return last
    return Overflow(I.N)


def _last_outside(I: TruncatedIdeal, make):
    for n in range(1, I.N + 1):
        if I.contains_element(make(n, I.field)):
            return n - 1
    return Overflow(I.N)


def invariant_s(I: TruncatedIdeal):
    """Largest n with the symmetriser s_n outside I."""
    return _last_outside(I, ga.symmetriser)


def invariant_a(I: TruncatedIdeal):
    """Largest n with the antisymmetriser a_n outside I."""
    return _last_outside(I, ga.antisymmetriser)


def growth_sequence(I: TruncatedIdeal) -> list[int]:
    return [I.level(n).codim for n in range(1, I.N + 1)]


def growth_roots(I: TruncatedIdeal) -> list[float]:
    return [g ** (1.0 / (2 * n)) for n, g in enumerate(growth_sequence(I), start=1)]


def growth_estimate(I: TruncatedIdeal) -> float:
    """max_n g_n^(1/2n), a lower bound for the growth rate."""
    if not I.all_exact:
        raise ValueError("growth needs exact levels")
    return max(growth_roots(I))


# --- inductive systems ----------------------------------------------------

@dataclass
class InductiveSystemTrunc:
    """Sets Phi^1, ..., Phi^N of (p-regular) partitions."""

    field: Field
    levels: dict = dc_field(default_factory=dict)

    @property
    def N(self) -> int:
        return max(self.levels) if self.levels else 0

    def at(self, n: int) -> frozenset:
        return self.levels.get(n, frozenset())

    def __eq__(self, other):
        return (isinstance(other, InductiveSystemTrunc) and self.field == other.field
                and {k: frozenset(v) for k, v in self.levels.items()}
                == {k: frozenset(v) for k, v in other.levels.items()})

    def is_valid(self) -> bool:
        """V in Phi^n iff some U in Phi^{n+1} restricts onto V."""
        for n in range(1, self.N):
            above = self.at(n + 1)
            p = self.field.characteristic
            for lam in partitions_lex(n):
                if p and not is_p_regular(lam, p):
                    continue
                hit = any(restriction_multiplicity(u, lam, (1,), self.field) for u in above)
                if hit != (lam in self.at(n)):
                    return False
        return True

    def to_json(self) -> dict:
        return {"field": self.field.name,
                "levels": {str(n): sorted([list(l) for l in v], reverse=True) for n, v in sorted(self.levels.items())}}

    @classmethod
    def from_json(cls, data) -> "InductiveSystemTrunc":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Field.parse(data["field"]),
                   {int(n): frozenset(Partition(l) for l in v) for n, v in data["levels"].items()})


def phi_of_label(lam: InfPartition, N: int, field: Field = QQ) -> InductiveSystemTrunc:
    p = field.characteristic
    return InductiveSystemTrunc(field, {n: frozenset(mu for mu in label_partitions(lam, n)
                                                     if not p or is_p_regular(mu, p))
                                        for n in range(1, N + 1)})


def phi_of(I: TruncatedIdeal, method: str = "constituents") -> InductiveSystemTrunc:
    """Simple constituents of the quotients kS_n / I_n.

    ``constituents`` decomposes the left regular quotient by (Brauer)
    characters; ``annihilator`` tests I_n inside Ann D^lam, which is
    equivalent because every simple module of an algebra is a quotient of
    its regular module.
    """
    p = I.field.characteristic
    levels = {}
    for n in range(1, I.N + 1):
        lev = I.level(n)
        if method == "constituents":
            if lev.codim == 0:
                levels[n] = frozenset()
                continue
            act = regular_quotient_action(n, I.field, lev)
            levels[n] = frozenset(brauer_constituents(act, p))
        elif method == "annihilator":
            levels[n] = frozenset(lam for lam in partitions_lex(n)
                                  if (not p or is_p_regular(lam, p)) and lev.issubset(simple_annihilator(tuple(lam), p)))
        else:
            raise ValueError(f"unknown method {method!r}")
    return InductiveSystemTrunc(I.field, levels)


def ideal_of_phi(phi: InductiveSystemTrunc, N: int | None = None) -> TruncatedIdeal:
    """Levelwise intersection of annihilators of restrictions of Phi^m, m >= n.

    In characteristic 0 this is exact; in characteristic p the intersection
    is cut off at N and the levels are flagged as upper approximations.
    """
    if N is None:
        N = phi.N
    field = phi.field
    p = field.characteristic
    levels = []
    for n in range(1, N + 1):
        subs = []
        for m in range(n, N + 1):
            for lam in sorted(phi.at(m)):
                subs.append(simple_annihilator(tuple(lam), p, n))
        sub = Subspace.full(field, math.factorial(n))
        for s in subs:
            sub = sub & s
        levels.append(sub)
    exact = [p == 0] * N
    return TruncatedIdeal(field, levels, exact, provenance="of_phi")


def t_indecomposable_at(phi: InductiveSystemTrunc, m: int, n: int, field: Field | None = None) -> bool:
    """Every D^lam (x) D^mu with lam in Phi^m, mu in Phi^n occurs in the
    restriction of some D^kappa with kappa in Phi^{m+n}."""
    field = field or phi.field
    for lam in phi.at(m):
        for mu in phi.at(n):
            if not any(restriction_multiplicity(k, lam, mu, field) for k in phi.at(m + n)):
                return False
    return True
