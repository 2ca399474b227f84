"""Representations of the cyclic group C_p over F_p and their semisimplification.

A representation is a multiset of Jordan block sizes.  Tensor products are
decomposed from ranks of powers of ``g - 1``; annihilator levels in the
semisimplified category come from the trace pairing against the
equivariant centralizer.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import flint

from . import group_algebra as ga
from .ideals import BudgetExceeded
from .linalg import GF, Subspace, is_prime, left_kernel, mat_rows

DEFAULT_BUDGET = 4096


@dataclass(frozen=True)
class RepCpObject:
    """A C_p-representation, given by its Jordan block sizes (each 1..p)."""

    p: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        blocks = tuple(sorted((int(b) for b in self.blocks), reverse=True))
        if any(not 1 <= b <= self.p for b in blocks):
            raise ValueError(f"block sizes must lie in 1..{self.p}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def indecomposable(cls, p: int, size: int) -> "RepCpObject":
        return cls(p, (size,))

    @property
    def dim(self) -> int:
        return sum(self.blocks)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for b in self.blocks:
            out[b] = out.get(b, 0) + 1
        return out

    def __add__(self, other: "RepCpObject") -> "RepCpObject":
        if other.p != self.p:
            raise ValueError("prime mismatch")
        return RepCpObject(self.p, self.blocks + other.blocks)

    def __str__(self):
        return " + ".join(f"W{b}" for b in self.blocks) or "0"


def nilpotent_jordan(p: int, blocks) -> flint.nmod_mat:
    """g - 1 for the Jordan matrix g with the given blocks:
    N e_1 = 0, N e_k = e_{k-1} inside each block."""
    d = sum(blocks)
    m = flint.nmod_mat(d, d, p)
    off = 0
    for b in blocks:
        for k in range(1, b):
            m[off + k - 1, off + k] = 1
        off += b
    return m


def generator_matrix(x: RepCpObject) -> flint.nmod_mat:
    n = nilpotent_jordan(x.p, x.blocks)
    for i in range(x.dim):
        n[i, i] = 1
    return n


def _identity(p: int, d: int) -> flint.nmod_mat:
    m = flint.nmod_mat(d, d, p)
    for i in range(d):
        m[i, i] = 1
    return m


def _kron(a: flint.nmod_mat, b: flint.nmod_mat, p: int) -> flint.nmod_mat:
    ar, br = a.nrows(), b.nrows()
    ea, eb = a.entries(), b.entries()
    d = ar * br
    out = [0] * (d * d)
    for i in range(ar):
        for j in range(ar):
            x = int(ea[i * ar + j])
            if not x:
                continue
            for k in range(br):
                base = (i * br + k) * d + j * br
                for l in range(br):
                    y = int(eb[k * br + l])
                    if y:
                        out[base + l] = x * y % p
    return flint.nmod_mat(d, d, out, p)


def jordan_type(nil: flint.nmod_mat, p: int) -> RepCpObject:
    """Block sizes of a nilpotent matrix from ranks of its powers:
    mult(s) = r(s-1) - 2 r(s) + r(s+1)."""
    d = nil.nrows()
    ranks = [d]
    power = _identity(p, d)
    for _ in range(p + 1):
        power = power * nil
        ranks.append(power.rank())
    blocks = []
    for s in range(1, p + 1):
        mult = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1]
        blocks += [s] * mult
    if ranks[p] != 0:
        raise ArithmeticError("(g - 1)^p is not zero")
    return RepCpObject(p, tuple(blocks))


@lru_cache(maxsize=None)
def _pair_decompose(p: int, a: int, b: int) -> tuple[int, ...]:
    ga_ = generator_matrix(RepCpObject(p, (a,)))
    gb = generator_matrix(RepCpObject(p, (b,)))
    g = _kron(ga_, gb, p)
    return jordan_type(g - _identity(p, a * b), p).blocks


def cp_tensor_decompose(a: RepCpObject, b: RepCpObject) -> RepCpObject:
    """Jordan blocks of a (x) b, read off the ranks of (g - 1)^k on the
    tensor space (computed per pair of blocks, which is the same thing since
    the tensor product distributes over direct sums)."""
    if a.p != b.p:
        raise ValueError("prime mismatch")
    blocks: list[int] = []
    for x in a.blocks:
        for y in b.blocks:
            blocks += _pair_decompose(a.p, x, y)
    return RepCpObject(a.p, tuple(blocks))


def cp_tensor_decompose_direct(a: RepCpObject, b: RepCpObject) -> RepCpObject:
    """Same as cp_tensor_decompose, on the full tensor space at once."""
    if a.p != b.p:
        raise ValueError("prime mismatch")
    g = _kron(generator_matrix(a), generator_matrix(b), a.p)
    return jordan_type(g - _identity(a.p, a.dim * b.dim), a.p)


def tensor_power(x: RepCpObject, n: int) -> RepCpObject:
    out = RepCpObject(x.p, (1,))
    for _ in range(n):
        out = cp_tensor_decompose(out, x)
    return out


def projective_dimension(x: RepCpObject) -> int:
    return x.p * x.multiplicities().get(x.p, 0)


def a_shortcut(x: RepCpObject) -> int:
    """dim minus the maximal projective summand: the antisymmetriser
    invariant of the image of x in the semisimplification."""
    return x.dim - projective_dimension(x)


# --- the semisimplified category ----------------------------------------

def verp_fusion(i: int, j: int, p: int) -> dict[int, int]:
    """L_i (x) L_j in Ver_p (truncated Clebsch-Gordan rule)."""
    if not (0 < i < p and 0 < j < p):
        raise ValueError("simple labels run over 1..p-1")
    out: dict[int, int] = {}
    for k in range(abs(i - j) + 1, min(i + j - 1, 2 * p - i - j - 1) + 1, 2):
        out[k] = out.get(k, 0) + 1
    return out


def verp_multiply(x: dict[int, int], y: dict[int, int], p: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in verp_fusion(i, j, p).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def verp_dim(x: dict[int, int]) -> int:
    """The additive invariant sending L_k to k."""
    return sum(k * m for k, m in x.items())


def verp_x_entry_closed(p: int, i: int, j: int) -> int:
    """The displayed values on and below the anti-diagonal; further entries
    are evaluated with the fusion rules."""
    if i + j <= p:
        return 2 ** (i - 1) * j
    if i + j == p + 1:
        return 2 ** (i - 1) * j - p
    x = {j: 1}
    for _ in range(i - 1):
        x = verp_multiply(x, {2: 1}, p)
    return verp_dim(x)


def verp_x_entry_oracle(p: int, i: int, j: int) -> int:
    w = RepCpObject(p, (j,))
    two = RepCpObject(p, (2,))
    for _ in range(i - 1):
        w = cp_tensor_decompose(w, two)
    return a_shortcut(w)


def verp_x_matrix(p: int, mode: str = "closed") -> list[list[int]]:
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    fn = {"closed": verp_x_entry_closed, "oracle": verp_x_entry_oracle}[mode]
    return [[fn(p, i, j) for j in range(1, p)] for i in range(1, p)]


def int_det(m: list[list[int]]) -> int:
    k = len(m)
    return int(flint.fmpz_mat(k, k, [x for row in m for x in row]).det())


def verp_determinant_report(p: int) -> dict:
    closed = verp_x_matrix(p, "closed")
    oracle = verp_x_matrix(p, "oracle")
    det = int_det(oracle)
    return {
        "p": p,
        "matrix": oracle,
        "closed_matrix": closed,
        "modes_agree": closed == oracle,
        "det": det,
        "abs_det": abs(det),
        "expected_abs_det": p ** (p - 2),
        "sign_by_exponent_(p+1)(p-2)/2": (-1) ** ((p + 1) * (p - 2) // 2),
        "sign_by_exponent_(p-1)(p-2)/2": (-1) ** ((p - 1) * (p - 2) // 2),
        "computed_sign": 1 if det > 0 else -1,
    }


# --- Ver_4 at the split Grothendieck level ---------------------------------

@dataclass(frozen=True)
class Ver4Object:
    """1^l + V^m + P^n."""

    l: int = 0
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if min(self.l, self.m, self.n) < 0:
            raise ValueError("multiplicities must be natural numbers")

    def __add__(self, o: "Ver4Object") -> "Ver4Object":
        return Ver4Object(self.l + o.l, self.m + o.m, self.n + o.n)

    def vector(self) -> tuple[int, int, int]:
        return (self.l, self.m, self.n)


VER4_ONE, VER4_V, VER4_P = Ver4Object(1, 0, 0), Ver4Object(0, 1, 0), Ver4Object(0, 0, 1)

# products of basis objects, as (l, m, n)
_VER4_TABLE = {
    (0, 0): (1, 0, 0), (0, 1): (0, 1, 0), (0, 2): (0, 0, 1),
    (1, 1): (0, 0, 1), (1, 2): (0, 2, 0), (2, 2): (0, 0, 2),
}


def ver4_fusion(x: Ver4Object, y: Ver4Object) -> Ver4Object:
    xv, yv = x.vector(), y.vector()
    out = [0, 0, 0]
    for a in range(3):
        for b in range(3):
            c = xv[a] * yv[b]
            if c:
                prod = _VER4_TABLE[(min(a, b), max(a, b))]
                for k in range(3):
                    out[k] += c * prod[k]
    return Ver4Object(*out)


def ver4_x_invariants(x: Ver4Object) -> tuple[int, int, int]:
    l, m, n = x.vector()
    return (l + 2 * m + 4 * n, 2 * l + 4 * m + 4 * n, 4 * l + 4 * m + 8 * n)


VER4_MATRIX = [[1, 2, 4], [2, 4, 4], [4, 4, 8]]


# --- negligible kernels ---------------------------------------------------

def _check_budget(x: RepCpObject, n: int, budget: int):
    d = x.dim ** n
    if d > budget:
        raise BudgetExceeded(f"dim(x)^n = {d} exceeds the budget {budget}")


def jordan_basis(nil: flint.nmod_mat, p: int) -> tuple[flint.nmod_mat, list[int]]:
    """Columns P with P^-1 nil P in Jordan form (N e_1 = 0, N e_k = e_{k-1}
    per block, blocks in non-increasing size); also the block sizes."""
    d = nil.nrows()
    powers = [_identity(p, d)]
    for _ in range(p):
        powers.append(powers[-1] * nil)
    kernels = [[] for _ in range(p + 1)]
    for s in range(1, p + 1):
        x, nullity = powers[s].nullspace()
        cols = mat_rows(x.transpose())[:nullity]
        kernels[s] = [[int(v) for v in c] for c in cols]
    chains: list[list[list[int]]] = []  # each chain listed bottom (kernel) to top

    def apply(v):
        m = flint.nmod_mat(d, 1, v, p)
        return [int(t) for t in (nil * m).entries()]

    for s in range(p, 0, -1):
        spanning = list(kernels[s - 1])
        for ch in chains:
            if len(ch) > s:
                spanning.append(ch[s - 1])
        candidates = kernels[s]
        if not candidates:
            continue
        cols = spanning + candidates
        m = flint.nmod_mat(len(cols), d, [x for c in cols for x in c], p).transpose()
        red, rank = m.rref()
        e = red.entries()
        ncol = len(cols)
        picks = []
        for r in range(rank):
            for c in range(ncol):
                if int(e[r * ncol + c]):
                    if c >= len(spanning):
                        picks.append(cols[c])
                    break
        for h in picks:
            chain = [h]
            for _ in range(s - 1):
                chain.append(apply(chain[-1]))
            chains.append(chain[::-1])
    sizes = [len(ch) for ch in chains]
    order = sorted(range(len(chains)), key=lambda k: -sizes[k])
    basis = [v for k in order for v in chains[k]]
    if len(basis) != d:
        raise ArithmeticError("Jordan basis construction failed")
    pm = flint.nmod_mat(d, d, [basis[c][r] for r in range(d) for c in range(d)], p)
    return pm, [sizes[k] for k in order]


def centralizer_positions(sizes: list[int]) -> list[list[tuple[int, int]]]:
    """A basis of the commutant of a nilpotent Jordan matrix, each element
    listed by the (row, col) positions of its unit entries.

    Hom(block b, block a) is spanned by Toeplitz maps with ones on the
    diagonal col - row = t, for max(0, s_b - s_a) <= t < s_b.
    """
    offs = list(itertools.accumulate([0] + sizes[:-1]))
    out = []
    for a, sa in enumerate(sizes):
        for b, sb in enumerate(sizes):
            for t in range(max(0, sb - sa), sb):
                out.append([(offs[a] + i, offs[b] + i + t) for i in range(sa) if 0 <= i + t < sb])
    return out


def tensor_space_perm(dim: int, n: int, perm: tuple) -> list[int]:
    """Image index of each basis word under the tensor flip action
    (letter at position k moves to position perm[k])."""
    words = list(itertools.product(range(dim), repeat=n))
    idx = {w: k for k, w in enumerate(words)}
    out = []
    for w in words:
        w2 = [0] * n
        for k, letter in enumerate(w):
            w2[perm[k]] = letter
        out.append(idx[tuple(w2)])
    return out


class NegligibleContext:
    """Jordan data of x^{(x) n} used for trace pairings."""

    def __init__(self, x: RepCpObject, n: int, budget: int = DEFAULT_BUDGET):
        _check_budget(x, n, budget)
        self.x, self.n, self.p = x, n, x.p
        p = x.p
        g1 = generator_matrix(x)
        g = _identity(p, 1)
        for _ in range(n):
            g = _kron(g, g1, p)
        self.dim = g.nrows()
        nil = g - _identity(p, self.dim)
        self.basis, self.sizes = jordan_basis(nil, p)
        self.basis_inv = self.basis.inv()
        self.positions = centralizer_positions(self.sizes)

    def conjugate(self, rho: flint.nmod_mat) -> flint.nmod_mat:
        return self.basis_inv * rho * self.basis

    def permutation_matrix(self, perm: tuple) -> flint.nmod_mat:
        d = self.dim
        m = flint.nmod_mat(d, d, self.p)
        for k, j in enumerate(tensor_space_perm(self.x.dim, self.n, perm)):
            m[j, k] = 1
        return m

    def element_matrix(self, z: ga.GroupAlgebraElement) -> flint.nmod_mat:
        d = self.dim
        out = [0] * (d * d)
        p = self.p
        for perm, c in z.terms.items():
            c = int(c)
            for k, j in enumerate(tensor_space_perm(self.x.dim, self.n, perm)):
                out[j * d + k] = (out[j * d + k] + c) % p
        return flint.nmod_mat(d, d, out, p)

    def pairing_row(self, rho: flint.nmod_mat) -> list:
        """tr(rho h) for every commutant basis element h."""
        e = self.conjugate(rho).entries()
        d = self.dim
        field = GF(self.p)
        row = []
        for pos in self.positions:
            acc = 0
            for (i, j) in pos:
                acc += int(e[j * d + i])
            row.append(field(acc))
        return row

    def is_negligible(self, z: ga.GroupAlgebraElement) -> bool:
        return all(v == 0 for v in self.pairing_row(self.element_matrix(z)))


def negligible_kernel_level(x: RepCpObject, n: int, budget: int = DEFAULT_BUDGET) -> Subspace:
    """{z in F_p S_n : z acts on x^{(x) n} by a negligible endomorphism}."""
    ctx = NegligibleContext(x, n, budget)
    field = GF(x.p)
    rows = [ctx.pairing_row(ctx.permutation_matrix(s)) for s in ga.all_perms(n)]
    return Subspace(field, math.factorial(n), left_kernel(field, rows, len(ctx.positions)))


def brute_force_centralizer(x: RepCpObject, n: int, budget: int = 16) -> list[flint.nmod_mat]:
    """Basis of {h : g h = h g} on x^{(x) n} by solving the commutation
    equations directly (small cases only)."""
    _check_budget(x, n, budget)
    p = x.p
    g1 = generator_matrix(x)
    g = _identity(p, 1)
    for _ in range(n):
        g = _kron(g, g1, p)
    d = g.nrows()
    ge = [[int(v) for v in row] for row in mat_rows(g)]
    # unknown h[i][j] at index i*d + j; equation (g h - h g)[r][c] = 0
    eqs = []
    for r in range(d):
        for c in range(d):
            row = [0] * (d * d)
            for k in range(d):
                row[k * d + c] += ge[r][k]
                row[r * d + k] -= ge[k][c]
            eqs.append(row)
    a = flint.nmod_mat(len(eqs), d * d, [v % p for row in eqs for v in row], p)
    sol, nullity = a.nullspace()
    cols = mat_rows(sol.transpose())[:nullity]
    return [flint.nmod_mat(d, d, [int(v) for v in c], p) for c in cols]


def negligible_kernel_level_brute(x: RepCpObject, n: int, budget: int = 16) -> Subspace:
    """negligible_kernel_level from a brute-force commutant (oracle)."""
    hs = brute_force_centralizer(x, n, budget)
    field = GF(x.p)
    ctx_dim = x.dim
    rows = []
    for s in ga.all_perms(n):
        img = tensor_space_perm(ctx_dim, n, s)
        d = len(img)
        row = []
        for h in hs:
            e = h.entries()
            # tr(rho h) = sum_k (rho h)[k,k] = sum_k h[img^-1 ...]; rho[img[k], k] = 1
            acc = 0
            for k in range(d):
                acc += int(e[k * d + img[k]])
            row.append(field(acc))
        rows.append(row)
    return Subspace(field, math.factorial(n), left_kernel(field, rows, len(hs)))


def negligible_ideal(x: RepCpObject, N: int, budget: int = DEFAULT_BUDGET):
    """TAnn of the image of x in the semisimplification, levels 1..N."""
    from .ideals import TruncatedIdeal

    levels = [negligible_kernel_level(x, n, budget) for n in range(1, N + 1)]
    return TruncatedIdeal(GF(x.p), levels, provenance=f"verp:{x.p}:{','.join(map(str, x.blocks))}")


def growth_bound_check(p: int, j: int, N: int, budget: int = DEFAULT_BUDGET, eps: float = 1e-6) -> dict:
    """Quotient dimensions of the annihilator of L_j against the
    Frobenius-Perron bound sin(pi j/p)/sin(pi/p)."""
    x = RepCpObject(p, (j,))
    gs = [math.factorial(n) - negligible_kernel_level(x, n, budget).dim for n in range(1, N + 1)]
    roots = [g ** (1.0 / (2 * n)) for n, g in enumerate(gs, start=1)]
    bound = math.sin(math.pi * j / p) / math.sin(math.pi / p)
    below = all(r <= bound + eps for r in roots)
    monotone = all(roots[k] <= roots[k + 1] + 1e-12 for k in range(len(roots) - 1))
    return {"p": p, "j": j, "g_sequence": gs, "roots": roots, "bound": bound,
            "below_bound": below, "nondecreasing": monotone, "pass": below and monotone}
