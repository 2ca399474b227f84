"""Matrix representations of symmetric groups.

Actions are given by the images of the adjacent transpositions
``s_1, ..., s_{n-1}`` and act on column vectors.  Specht modules are built
integrally on the standard polytabloid basis, so the same matrices serve
over Q and over every F_p.
"""

from __future__ import annotations

import itertools
import json
import math
from functools import lru_cache

import flint

from . import group_algebra as ga
from .linalg import QQ, Field, GF, Subspace, int_matrix, kron, left_kernel, mat_rows, zero_matrix
from .partitions import Partition, hook_dimension, is_p_regular, partitions_lex, partitions_of


class RelationError(ValueError):
    """Generator images violate the Coxeter relations."""


class RepnAction:
    """A representation of S_n given by images of adjacent transpositions."""

    def __init__(self, degree: int, field: Field, dim: int, gens, *, check: bool = True, label: str = ""):
        self.degree = degree
        self.field = field
        self.dim = dim
        self.gens = list(gens)
        self.label = label
        self._cache: dict = {}
        if len(self.gens) != max(degree - 1, 0):
            raise ValueError(f"S_{degree} needs {max(degree - 1, 0)} generator images, got {len(self.gens)}")
        for g in self.gens:
            if g.nrows() != dim or g.ncols() != dim:
                raise ValueError("generator image has the wrong size")
        if check:
            self.check_relations()

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"RepnAction(S_{self.degree}, {self.field!r}, dim={self.dim}{tag})"

    def identity(self):
        return int_matrix(self.field, self.dim, self.dim,
                          [1 if i == j else 0 for i in range(self.dim) for j in range(self.dim)])

    def check_relations(self):
        one = self.identity()
        g = self.gens
        for i, a in enumerate(g):
            if a * a != one:
                raise RelationError(f"s_{i + 1} is not an involution")
            if i + 1 < len(g):
                b = g[i + 1]
                ab = a * b
                if ab * ab * ab != one:
                    raise RelationError(f"braid relation fails for s_{i + 1}, s_{i + 2}")
            for j in range(i + 2, len(g)):
                if a * g[j] != g[j] * a:
                    raise RelationError(f"s_{i + 1} and s_{j + 1} do not commute")

    def matrix(self, perm) -> object:
        """Image of a permutation (0-based tuple)."""
        perm = tuple(perm)
        if len(perm) != self.degree:
            raise ValueError("permutation degree mismatch")
        m = self._cache.get(perm)
        if m is None:
            m = self.identity()
            for i in ga.perm_as_adjacent_word(perm):
                m = m * self.gens[i - 1]
            self._cache[perm] = m
        return m

    def all_matrices(self) -> list:
        """Images of every permutation, in canonical order."""
        if "all" not in self._cache:
            n = self.degree
            found = {ga.identity(n): self.identity()}
            frontier = [ga.identity(n)]
            while frontier:
                nxt = []
                for s in frontier:
                    ms = found[s]
                    for i, g in enumerate(self.gens):
                        t = ga.compose(s, ga.adjacent_transposition(n, i + 1))
                        if t not in found:
                            found[t] = ms * g
                            nxt.append(t)
                frontier = nxt
            self._cache["all"] = [found[p] for p in ga.all_perms(n)]
        return self._cache["all"]

    def element_matrix(self, x: ga.GroupAlgebraElement):
        if x.degree != self.degree:
            raise ValueError("degree mismatch")
        out = zero_matrix(self.field, self.dim, self.dim)
        for p, c in x.terms.items():
            out = out + self.matrix(p) * c
        return out

    def trace(self, perm):
        m = self.matrix(perm)
        e = m.entries()
        total = self.field.zero
        for i in range(self.dim):
            total += e[i * self.dim + i]
        return total

    def restrict(self, k: int) -> "RepnAction":
        """Restriction to S_k < S_n."""
        if not 0 <= k <= self.degree:
            raise ValueError("bad restriction degree")
        return RepnAction(k, self.field, self.dim, self.gens[:max(k - 1, 0)], check=False,
                          label=f"Res_{k} {self.label}".strip())

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "degree": self.degree,
            "field": self.field.name,
            "dim": self.dim,
            "generators": [[[fmt(v) for v in row] for row in mat_rows(g)] for g in self.gens],
        }

    @classmethod
    def from_json(cls, data) -> "RepnAction":
        if isinstance(data, str):
            data = json.loads(data)
        field = Field.parse(data["field"])
        d = int(data["dim"])
        gens = [field.matrix([[field.parse_scalar(v) for v in row] for row in g], d) if d else zero_matrix(field, 0, 0)
                for g in data["generators"]]
        return cls(int(data["degree"]), field, d, gens)


def _cast(field: Field, m):
    """Integer/rational flint matrix -> matrix over field."""
    return int_matrix(field, m.nrows(), m.ncols(), m.entries())


def trivial_action(n: int, field: Field = QQ) -> RepnAction:
    one = int_matrix(field, 1, 1, [1])
    return RepnAction(n, field, 1, [one] * max(n - 1, 0), check=False, label="trivial")


def sign_action(n: int, field: Field = QQ) -> RepnAction:
    m = int_matrix(field, 1, 1, [-1])
    return RepnAction(n, field, 1, [m] * max(n - 1, 0), check=False, label="sign")


def direct_sum(actions) -> RepnAction:
    actions = list(actions)
    a0 = actions[0]
    d = sum(a.dim for a in actions)
    gens = []
    for i in range(max(a0.degree - 1, 0)):
        m = zero_matrix(a0.field, d, d)
        off = 0
        for a in actions:
            g = a.gens[i]
            for r in range(a.dim):
                for c in range(a.dim):
                    v = g[r, c]
                    if v != 0:
                        m[off + r, off + c] = v
            off += a.dim
        gens.append(m)
    return RepnAction(a0.degree, a0.field, d, gens, check=False)


def tensor_action(a: RepnAction, b: RepnAction) -> RepnAction:
    """Diagonal (inner tensor) product."""
    if a.degree != b.degree or a.field != b.field:
        raise ValueError("incompatible actions")
    gens = [kron(a.field, x, y) for x, y in zip(a.gens, b.gens)]
    return RepnAction(a.degree, a.field, a.dim * b.dim, gens, check=False)


# --- Specht modules -------------------------------------------------------

def standard_tableaux(lam: tuple) -> list[tuple[tuple[int, ...], ...]]:
    """Standard tableaux of shape lam with letters 0..n-1, in a fixed order."""
    lam = tuple(lam)
    n = sum(lam)
    out = []

    def rec(rows, k):
        if k == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in lam], 0)
    return out


def _tabloid(tab, n) -> tuple[int, ...]:
    row_of = [0] * n
    for r, row in enumerate(tab):
        for x in row:
            row_of[x] = r
    return tuple(row_of)


def _columns(tab) -> list[list[int]]:
    cols = []
    for j in range(len(tab[0]) if tab else 0):
        cols.append([row[j] for row in tab if len(row) > j])
    return cols


def polytabloid(tab, n) -> dict[tuple[int, ...], int]:
    """e_t = sum over the column group of sgn(pi) {pi t}, in tabloid coordinates."""
    base = _tabloid(tab, n)
    cols = _columns(tab)
    out: dict = {}
    for choice in itertools.product(*[itertools.permutations(c) for c in cols]):
        # pi sends col[k] -> perm[k]; {pi t} has row_of[pi(x)] = row_of[x]
        row_of = list(base)
        sgn = 1
        for col, perm in zip(cols, choice):
            sgn *= ga.sign(tuple(col.index(y) for y in perm))
            for x, y in zip(col, perm):
                row_of[y] = base[x]
        key = tuple(row_of)
        out[key] = out.get(key, 0) + sgn
    return {k: v for k, v in out.items() if v}


class SpechtData:
    """Integral Specht module data: generator matrices, Gram matrix."""

    def __init__(self, lam: tuple):
        lam = Partition(lam)
        self.shape = lam
        n = lam.size
        self.n = n
        self.tableaux = standard_tableaux(lam)
        f = len(self.tableaux)
        self.dim = f
        self.pivots = [_tabloid(t, n) for t in self.tableaux]
        self.polys = [polytabloid(t, n) for t in self.tableaux]
        bp = flint.fmpz_mat(f, f, [self.polys[j].get(self.pivots[i], 0) for i in range(f) for j in range(f)])
        inv = bp.inv()
        if any(int(v.q) != 1 for v in inv.entries()):
            raise ArithmeticError("pivot block is not unimodular")
        self.pivot_inverse = flint.fmpz_mat(f, f, [int(v.p) for v in inv.entries()])
        self.gens = [self._generator(i) for i in range(1, n)]
        gram = []
        for a in self.polys:
            for b in self.polys:
                gram.append(sum(v * b.get(k, 0) for k, v in a.items()))
        self.gram = flint.fmpz_mat(f, f, gram)

    def coordinates(self, poly: dict) -> list[int]:
        """Coordinates of an element of S^lam (tabloid dict) in the standard basis."""
        f = self.dim
        v = flint.fmpz_mat(f, 1, [poly.get(t, 0) for t in self.pivots])
        return [int(x) for x in (self.pivot_inverse * v).entries()]

    def _generator(self, i: int):
        s = ga.adjacent_transposition(self.n, i)
        f = self.dim
        cols = []
        for tab in self.tableaux:
            st = tuple(tuple(s[x] for x in row) for row in tab)
            cols.append(self.coordinates(polytabloid(st, self.n)))
        return flint.fmpz_mat(f, f, [cols[j][r] for r in range(f) for j in range(f)])


@lru_cache(maxsize=None)
def specht_data(lam: tuple) -> SpechtData:
    return SpechtData(tuple(lam))


def specht_action(lam, field: Field = QQ) -> RepnAction:
    """The Specht module S^lam on standard polytabloids."""
    lam = Partition(lam)
    if lam.size < 1:
        raise ValueError("need |lambda| >= 1")
    data = specht_data(tuple(lam))
    gens = [_cast(field, g) for g in data.gens]
    return RepnAction(lam.size, field, data.dim, gens, label=f"S^{tuple(lam)}")


def quotient_action(action: RepnAction, sub: Subspace) -> RepnAction:
    """Action on V / sub, where sub is an invariant subspace of column vectors
    (stored as row vectors)."""
    q = sub.quotient_matrix()
    comp = sub.complement_indices()
    d = len(comp)
    field = action.field
    gens = []
    for g in action.gens:
        rows = mat_rows(g)
        m = [[field.zero] * d for _ in range(d)]
        for a, j in enumerate(comp):
            for k in range(action.dim):
                v = rows[k][j]
                if v != 0:
                    qk = q[k]
                    for b in range(d):
                        if qk[b] != 0:
                            m[b][a] += v * qk[b]
        gens.append(field.matrix(m, d) if d else zero_matrix(field, 0, 0))
    return RepnAction(action.degree, field, d, gens, check=False, label=f"{action.label}/sub")


@lru_cache(maxsize=None)
def _modular_simple(lam: tuple, p: int) -> RepnAction:
    field = GF(p) if p else QQ
    spe = specht_action(lam, field)
    if p == 0:
        return spe
    data = specht_data(lam)
    gram = _cast(field, data.gram)
    rad = left_kernel(field, mat_rows(gram.transpose()), data.dim)
    act = quotient_action(spe, Subspace(field, data.dim, rad))
    if act.dim == 0:
        raise ArithmeticError(f"D^{lam} vanished over F_{p}")
    act.check_relations()
    act.label = f"D^{lam}"
    return act


def modular_simple(lam, p: int) -> RepnAction:
    """D^lam over F_p: the Specht module modulo the radical of its form.

    ``p = 0`` returns the Specht module over Q.
    """
    lam = Partition(lam)
    if p and not is_p_regular(lam, p):
        raise ValueError(f"{tuple(lam)} is not {p}-regular")
    return _modular_simple(tuple(lam), p)


def simple_module(lam, field: Field) -> RepnAction:
    return modular_simple(lam, field.characteristic)


# --- ordinary characters --------------------------------------------------

@lru_cache(maxsize=None)
def character_value(lam: tuple, cycle: tuple) -> int:
    """chi^lam on the class of the given cycle type (Murnaghan-Nakayama)."""
    lam, cycle = tuple(Partition(lam)), tuple(Partition(cycle))
    if sum(lam) != sum(cycle):
        raise ValueError("size mismatch")
    if not cycle:
        return 1
    k, rest = cycle[0], cycle[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        new = sorted((bset - {b}) | {c}, reverse=True)
        mu = Partition(x - (ell - 1 - i) for i, x in enumerate(new))
        total += (-1) ** height * character_value(tuple(mu), rest)
    return total


def class_size(cycle: tuple) -> int:
    n = sum(cycle)
    z = 1
    for k, grp in itertools.groupby(sorted(cycle)):
        m = len(list(grp))
        z *= k ** m * math.factorial(m)
    return math.factorial(n) // z


def class_representative(cycle: tuple) -> tuple:
    """A permutation of the given cycle type on consecutive letters."""
    n = sum(cycle)
    w = list(range(n))
    start = 0
    for k in cycle:
        for j in range(k):
            w[start + j] = start + (j + 1) % k
        start += k
    return tuple(w)


def cycle_types(n: int) -> list[Partition]:
    return partitions_lex(n)


def character_table(n: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    rows = partitions_lex(n)
    cols = partitions_lex(n)
    return rows, cols, [[character_value(tuple(l), tuple(c)) for c in cols] for l in rows]


def character_table_csv(n: int) -> str:
    rows, cols, table = character_table(n)
    lines = ["lambda," + ",".join(" ".join(map(str, c)) for c in cols)]
    for lam, vals in zip(rows, table):
        lines.append(" ".join(map(str, lam)) + "," + ",".join(map(str, vals)))
    return "\n".join(lines) + "\n"


# --- Brauer characters ----------------------------------------------------

def _mobius(n: int) -> int:
    res, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            res = -res
        k += 1
    return -res if n > 1 else res


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _nullity_of_poly(field: Field, a, coeffs: list[int], dim: int) -> int:
    ident = int_matrix(field, dim, dim, [1 if i == j else 0 for i in range(dim) for j in range(dim)])
    acc = zero_matrix(field, dim, dim)
    for c in reversed(coeffs):
        acc = acc * a + ident * c
    return dim - acc.rank()


def brauer_value(field: Field, a, order: int, dim: int) -> int:
    """Brauer character of a matrix of order coprime to p (or an ordinary
    trace in characteristic 0), as an integer.

    Eigenvalues that are primitive d-th roots of unity sum to mu(d) times
    their count divided by phi(d); the count is the nullity of Phi_d(a).
    Uniform distribution over primitive roots holds because symmetric group
    classes are rational.
    """
    if dim == 0:
        return 0
    if field.characteristic == 0:
        e = a.entries()
        t = sum((e[i * dim + i] for i in range(dim)), flint.fmpq(0))
        return int(t.p)
    total = 0
    for d in range(1, order + 1):
        if order % d:
            continue
        mu = _mobius(d)
        if mu == 0:
            continue
        coeffs = [int(c) for c in flint.fmpz_poly.cyclotomic(d).coeffs()]
        nul = _nullity_of_poly(field, a, coeffs, dim)
        phi = _totient(d)
        if nul % phi:
            raise ArithmeticError("eigenvalue count not divisible by phi(d)")
        total += mu * (nul // phi)
    return total


def p_regular_classes(n: int, p: int) -> list[Partition]:
    return [c for c in partitions_lex(n) if p == 0 or all(k % p for k in c)]


def _order(cycle) -> int:
    return math.lcm(*cycle) if cycle else 1


def brauer_character(action: RepnAction, classes=None) -> list[int]:
    p = action.field.characteristic
    if classes is None:
        classes = p_regular_classes(action.degree, p)
    out = []
    for c in classes:
        rep = class_representative(tuple(c))
        out.append(brauer_value(action.field, action.matrix(rep), _order(c), action.dim))
    return out


@lru_cache(maxsize=None)
def brauer_table(n: int, p: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Rows: simples D^lam (lam p-regular, lex order); columns: p-regular classes."""
    if n == 0:
        return (Partition(()),), (Partition(()),), ((1,),)
    classes = p_regular_classes(n, p)
    simples = [l for l in partitions_lex(n) if is_p_regular(l, p)]
    if p == 0:
        table = [tuple(character_value(tuple(l), tuple(c)) for c in classes) for l in simples]
    else:
        table = [tuple(brauer_character(modular_simple(l, p), classes)) for l in simples]
    return tuple(simples), tuple(classes), tuple(table)


def _solve_rows(table, values) -> list:
    """Solve sum_l m_l table[l] = values over Q."""
    k = len(table)
    a = flint.fmpq_mat(k, k, [table[j][i] for i in range(k) for j in range(k)])
    b = flint.fmpq_mat(k, 1, list(values))
    try:
        x = a.solve(b)
    except ZeroDivisionError as exc:
        raise ArithmeticError("singular Brauer character system") from exc
    return list(x.entries())


def brauer_constituents(action: RepnAction, p: int | None = None) -> dict[Partition, int]:
    """Composition multiplicities of the simple modules in ``action``."""
    if p is None:
        p = action.field.characteristic
    if p != action.field.characteristic:
        raise ValueError("p must match the characteristic of the action")
    n = action.degree
    if n <= 1:
        return {Partition((1,) * n): action.dim} if action.dim else {}
    simples, classes, table = brauer_table(n, p)
    if p == 0:
        vals = brauer_character(action, classes)
        out = {}
        for lam, row in zip(simples, table):
            s = sum(class_size(tuple(c)) * v * x for c, v, x in zip(classes, vals, row))
            m, r = divmod(s, math.factorial(n))
            if r:
                raise ArithmeticError("non-integral multiplicity")
            if m:
                out[lam] = m
        return out
    vals = brauer_character(action, classes)
    mult = _solve_rows(table, vals)
    out = {}
    for lam, m in zip(simples, mult):
        if int(m.q) != 1 or m < 0:
            raise ArithmeticError(f"bad multiplicity {m} for {lam}")
        if m != 0:
            out[lam] = int(m.p)
    return out


def restriction_multiplicity(kappa, lam, mu, field: Field = QQ) -> int:
    """[Res_{S_m x S_n} D^kappa : D^lam (x) D^mu].

    Computed from characters in both cases: ordinary inner products over Q,
    Brauer characters over F_p.
    """
    kappa, lam, mu = Partition(kappa), Partition(lam), Partition(mu)
    m, n = lam.size, mu.size
    if kappa.size != m + n:
        raise ValueError("sizes incompatible")
    p = field.characteristic
    if p and not (is_p_regular(kappa, p) and is_p_regular(lam, p) and is_p_regular(mu, p)):
        raise ValueError("partitions must be p-regular")
    if p == 0:
        total = 0
        for c1 in partitions_of(m):
            for c2 in partitions_of(n):
                c = tuple(sorted(c1 + c2, reverse=True))
                total += (class_size(tuple(c1)) * class_size(tuple(c2)) * character_value(tuple(kappa), c)
                          * character_value(tuple(lam), tuple(c1)) * character_value(tuple(mu), tuple(c2)))
        q, r = divmod(total, math.factorial(m) * math.factorial(n))
        assert r == 0
        return q
    s_m, cl_m, t_m = brauer_table(m, p)
    s_n, cl_n, t_n = brauer_table(n, p)
    big = modular_simple(kappa, p)
    # F[c1, c2] = Brauer character of D^kappa at an element of type c1 u c2
    f_vals = []
    for c1 in cl_m:
        for c2 in cl_n:
            rep = ga.shift_concat(class_representative(tuple(c1)), class_representative(tuple(c2)))
            f_vals.append(brauer_value(big.field, big.matrix(rep), _order(tuple(c1) + tuple(c2)), big.dim))
    km, kn = len(cl_m), len(cl_n)
    bm = flint.fmpq_mat(km, km, [t_m[i][j] for i in range(km) for j in range(km)])
    bn = flint.fmpq_mat(kn, kn, [t_n[i][j] for i in range(kn) for j in range(kn)])
    f = flint.fmpq_mat(km, kn, f_vals)
    coeff = bm.transpose().inv() * f * bn.inv()
    v = coeff[s_m.index(lam), s_n.index(mu)]
    if int(v.q) != 1:
        raise ArithmeticError("non-integral multiplicity")
    return int(v.p)


# --- annihilators, induction, tensor spaces -------------------------------

def annihilator_subspace(action: RepnAction) -> Subspace:
    """Kernel of k S_n -> End(V), in canonical permutation coordinates."""
    n = action.degree
    field = action.field
    size = math.factorial(n)
    if action.dim == 0:
        return Subspace.full(field, size)
    rows = [list(m.entries()) for m in action.all_matrices()]
    return Subspace(field, size, left_kernel(field, rows, action.dim * action.dim))


@lru_cache(maxsize=None)
def coset_representatives(n: int, i: int) -> tuple[tuple, ...]:
    """Minimal length representatives of S_n / (S_i x S_{n-i}), lex order:
    words increasing on the first i and on the last n-i positions."""
    out = []
    for first in itertools.combinations(range(n), i):
        rest = tuple(x for x in range(n) if x not in first)
        out.append(tuple(first) + rest)
    return tuple(sorted(out))


def coset_split(s: tuple, i: int) -> tuple[tuple, tuple, tuple]:
    """Write s = c (u . w) with c a minimal coset representative."""
    c = tuple(sorted(s[:i])) + tuple(sorted(s[i:]))
    y = ga.compose(ga.inverse(c), s)
    u = y[:i]
    w = tuple(x - i for x in y[i:])
    return c, u, w


def _action_matrix(action: RepnAction, perm):
    if action.degree == 0:
        return action.identity()
    return action.matrix(perm)


def induced_action(left: RepnAction, right: RepnAction) -> RepnAction:
    """Ind from S_i x S_{n-i} to S_n of left (x) right.

    Basis: coset representative (x) left basis (x) right basis.  Degree-0
    factors stand for k S_0 = k acting on a vector space.
    """
    if left.field != right.field:
        raise ValueError("field mismatch")
    field = left.field
    i, j = left.degree, right.degree
    n = i + j
    reps = coset_representatives(n, i)
    pos = {c: k for k, c in enumerate(reps)}
    block = left.dim * right.dim
    d = len(reps) * block
    gens = []
    for g in range(1, n):
        s = ga.adjacent_transposition(n, g)
        m = zero_matrix(field, d, d)
        for a, c in enumerate(reps):
            c2, u, w = coset_split(ga.compose(s, c), i)
            b = pos[c2]
            blk = kron(field, _action_matrix(left, u), _action_matrix(right, w))
            e = blk.entries()
            for r in range(block):
                for q in range(block):
                    v = e[r * block + q]
                    if v != 0:
                        m[b * block + r, a * block + q] = v
        gens.append(m)
    return RepnAction(n, field, d, gens, check=False, label=f"Ind({left.label}#{right.label})")


def _koszul_apply(word: tuple, perm: tuple, m_even: int) -> tuple[tuple, int]:
    """Signed permutation of tensor positions: letter at position k moves to
    position perm[k]; the sign counts inversions among odd letters."""
    out = [0] * len(word)
    for k, x in enumerate(word):
        out[perm[k]] = x
    odd = [k for k, x in enumerate(word) if x >= m_even]
    inv = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd)) if perm[odd[a]] > perm[odd[b]])
    return tuple(out), (-1 if inv % 2 else 1)


def _signed_perm_action(words: list[tuple], n: int, m_even: int, field: Field, label: str) -> RepnAction:
    idx = {w: k for k, w in enumerate(words)}
    d = len(words)
    gens = []
    for g in range(1, n):
        s = ga.adjacent_transposition(n, g)
        m = zero_matrix(field, d, d)
        for k, w in enumerate(words):
            w2, sg = _koszul_apply(w, s, m_even)
            m[idx[w2], k] = field(sg)
        gens.append(m)
    return RepnAction(n, field, d, gens, check=False, label=label)


def superspace_action(m: int, n_odd: int, tensor_power: int, field: Field = QQ) -> RepnAction:
    """S_i acting on V^{(x) i} for V of superdimension m|n_odd, with Koszul signs."""
    if m + n_odd < 1 or tensor_power < 1:
        raise ValueError("need m + n_odd >= 1 and tensor_power >= 1")
    words = list(itertools.product(range(m + n_odd), repeat=tensor_power))
    act = _signed_perm_action(words, tensor_power, m, field, f"V({m}|{n_odd})^{tensor_power}")
    act.check_relations()
    return act


def _sorted_compositions(total: int, parts: int, max_part=None):
    """Non-increasing tuples of length `parts` of naturals summing to total."""
    if max_part is None:
        max_part = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, max_part), -1, -1):
        if first * parts < total:
            break
        for rest in _sorted_compositions(total - first, parts - 1, first):
            yield (first,) + rest


def superspace_weight_actions(m: int, n_odd: int, tensor_power: int, field: Field = QQ) -> list[RepnAction]:
    """The weight spaces of V^{(x) i}, one per content type up to permuting
    even letters and odd letters among themselves.

    The tensor space is their direct sum (with multiplicities), so the
    annihilator is the intersection of theirs.
    """
    if m + n_odd < 1 or tensor_power < 1:
        raise ValueError("need m + n_odd >= 1 and tensor_power >= 1")
    out = []
    for k in range(tensor_power + 1):
        for ev in _sorted_compositions(k, m):
            for od in _sorted_compositions(tensor_power - k, n_odd):
                content = []
                for letter, c in enumerate(ev):
                    content += [letter] * c
                for letter, c in enumerate(od):
                    content += [m + letter] * c
                words = sorted(set(itertools.permutations(content)))
                out.append(_signed_perm_action(words, tensor_power, m, field, f"wt{ev}|{od}"))
    return out


def regular_quotient_action(n: int, field: Field, ideal: Subspace | None = None) -> RepnAction:
    """Left multiplication on k S_n / ideal (ideal = None gives the regular module)."""
    size = math.factorial(n)
    if ideal is None:
        ideal = Subspace.zero(field, size)
    q = ideal.quotient_matrix()
    comp = ideal.complement_indices()
    d = len(comp)
    perms = ga.all_perms(n)
    idx = ga.perm_index(n)
    gens = []
    for g in range(1, n):
        s = ga.adjacent_transposition(n, g)
        m = zero_matrix(field, d, d)
        for a, j in enumerate(comp):
            col = q[idx[ga.compose(s, perms[j])]]
            for b, v in enumerate(col):
                if v != 0:
                    m[b, a] = v
        gens.append(m)
    return RepnAction(n, field, d, gens, check=False, label="regular quotient")
