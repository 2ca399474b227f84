"""Partition combinatorics: inclusion order, conjugation, Young graph paths,
Littlewood-Richardson coefficients and hook shapes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

INF = math.inf


class Partition(tuple):
    """A finite partition: a non-increasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def row(self, i: int) -> int:
        """The i-th row (1-based); 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def __repr__(self):
        return f"Partition({list(self)})"

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)


@dataclass(frozen=True)
class InfPartition:
    """A partition with infinite size: ``inf_rows`` rows equal to infinity,
    then ``head``, then the constant value ``tail`` forever.

    ``inf_rows == INF`` gives the shape (inf^inf), the label of the zero ideal.
    """

    inf_rows: int | float = 0
    head: tuple[int, ...] = ()
    tail: int = 0

    def __post_init__(self):
        head = tuple(int(x) for x in self.head)
        m = self.inf_rows
        if m != INF:
            m = int(m)
            if m < 0:
                raise ValueError("inf_rows must be non-negative")
        if self.tail < 0 or any(h < self.tail for h in head):
            raise ValueError("head entries must be >= tail")
        if any(head[i] < head[i + 1] for i in range(len(head) - 1)):
            raise ValueError("head must be non-increasing")
        while head and head[-1] == self.tail:
            head = head[:-1]
        if m == INF:
            head, tail = (), 0
        else:
            tail = int(self.tail)
            if m == 0 and tail == 0:
                raise ValueError("an InfPartition needs infinite rows or a positive tail")
        object.__setattr__(self, "inf_rows", m)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail if m != INF else 0)

    @property
    def is_zero_label(self) -> bool:
        return self.inf_rows == INF

    def row(self, i: int):
        if i <= self.inf_rows:
            return INF
        k = i - int(self.inf_rows)
        if k <= len(self.head):
            return self.head[k - 1]
        return self.tail

    def is_hook_shape(self) -> bool:
        """Whether this is (inf^m, n^inf), i.e. has no removable box."""
        return not self.head

    def __str__(self):
        if self.is_zero_label:
            return "(inf^inf)"
        parts = []
        if self.inf_rows:
            parts.append(f"inf^{self.inf_rows}")
        parts.extend(str(h) for h in self.head)
        parts.append(f"{self.tail}^inf")
        return "(" + ",".join(parts) + ")"

    def to_json(self) -> dict:
        m = "inf" if self.inf_rows == INF else int(self.inf_rows)
        return {"inf_rows": m, "head": list(self.head), "tail": self.tail}

    @classmethod
    def from_json(cls, data: dict) -> "InfPartition":
        m = data.get("inf_rows", 0)
        return cls(INF if m == "inf" else int(m), tuple(data.get("head", ())), int(data.get("tail", 0)))


ZERO_LABEL = InfPartition(INF)


def hook_shape(m: int, n: int) -> InfPartition:
    """The label (inf^m, n^inf)."""
    return InfPartition(m, (), n)


def _row(lam, i):
    if isinstance(lam, InfPartition):
        return lam.row(i)
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(lhs, rhs) -> bool:
    """True iff ``rhs`` is contained in ``lhs`` rowwise."""
    return all(rhs[i - 1] <= _row(lhs, i) for i in range(1, len(rhs) + 1))


@lru_cache(maxsize=None)
def transpose(p: tuple) -> Partition:
    if not p:
        return Partition(())
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order ((n) first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(()),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_lex(n: int) -> list[Partition]:
    """Partitions of n in lexicographic order of their part lists."""
    return sorted(partitions_of(n), key=tuple)


def is_p_regular(lam, p: int) -> bool:
    """No part repeated p or more times (every partition is 0-regular)."""
    if p == 0:
        return True
    run = 1
    for i in range(1, len(lam)):
        run = run + 1 if lam[i] == lam[i - 1] else 1
        if run >= p:
            return False
    return p > 1 or not lam


def p_regular_partitions(n: int, p: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if is_p_regular(lam, p)]


@lru_cache(maxsize=None)
def hook_dimension(lam: tuple) -> int:
    """Number of standard tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    conj = transpose(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // prod


def hook_member(m: int, n: int, p) -> bool:
    """Whether p is contained in the shape (inf^m, n^inf)."""
    return _row(p, m + 1) <= n


def add_box(p: tuple) -> list[Partition]:
    """All partitions obtained by adding one box."""
    out = []
    p = tuple(p)
    for i in range(len(p) + 1):
        row = p[i] if i < len(p) else 0
        if i == 0 or p[i - 1] > row:
            q = list(p)
            if i < len(p):
                q[i] += 1
            else:
                q.append(1)
            out.append(Partition(q))
    return out


def remove_box(p: tuple) -> list[Partition]:
    out = []
    p = tuple(p)
    for i in range(len(p)):
        if i == len(p) - 1 or p[i] > p[i + 1]:
            q = list(p)
            q[i] -= 1
            out.append(Partition(q))
    return out


@lru_cache(maxsize=None)
def lr_coefficient(kappa: tuple, lam: tuple, nu: tuple) -> int:
    """Littlewood-Richardson coefficient c^kappa_{lam, nu}.

    Counts semistandard fillings of the skew shape kappa/lam with content nu
    whose reverse reading word (rows top to bottom, right to left) is a
    lattice word.
    """
    kappa, lam, nu = tuple(kappa), tuple(lam), tuple(nu)
    if sum(kappa) != sum(lam) + sum(nu) or not contains(kappa, lam):
        return 0
    if not nu:
        return 1
    cells = []
    for i, row in enumerate(kappa):
        start = lam[i] if i < len(lam) else 0
        for j in range(row - 1, start - 1, -1):
            cells.append((i, j))
    inner = [lam[i] if i < len(lam) else 0 for i in range(len(kappa))]
    k = len(nu)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * k

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = k - 1
        # rows weakly increase left to right; we fill right to left
        if (i, j + 1) in filling:
            hi = min(hi, filling[(i, j + 1)])
        lo = 0
        if i > 0 and j >= inner[i - 1]:
            lo = filling[(i - 1, j)] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v]:
                continue
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            total += rec(idx + 1)
            del filling[(i, j)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_bound_holds(kappa, lam, nu, s: int, t: int) -> bool:
    """Check that a nonzero c^kappa_{lam,nu} forces kappa_{s+i} <= t + lam_i.

    Requires nu_{s+1} <= t.
    """
    if _row(nu, s + 1) > t:
        raise ValueError(f"precondition nu_{s + 1} <= {t} violated for nu={tuple(nu)}")
    if lr_coefficient(tuple(kappa), tuple(lam), tuple(nu)) == 0:
        return True
    return all(_row(kappa, s + i) <= t + _row(lam, i) for i in range(1, len(kappa) + 1))


@dataclass(frozen=True)
class YoungPath:
    """A finite initial segment of a path in the Young graph."""

    steps: tuple[Partition, ...]

    def __post_init__(self):
        steps = tuple(Partition(s) for s in self.steps)
        for a, b in zip(steps, steps[1:]):
            if b.size != a.size + 1 or not contains(b, a):
                raise ValueError(f"{b} does not cover {a}")
        object.__setattr__(self, "steps", steps)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class PathLimit:
    supremum: Partition
    growing_rows: tuple[int, ...]
    stabilized: bool

    def as_label(self) -> InfPartition | Partition:
        """Heuristic limit: rows still growing are read as infinite.

        Only meaningful when the growing rows form an initial segment; column
        growth is not extrapolated.
        """
        rows = list(self.supremum)
        g = set(self.growing_rows)
        m = 0
        while m + 1 in g:
            m += 1
        if m == 0:
            return self.supremum
        return InfPartition(m, tuple(rows[m:]), 0)


def path_limit(path: YoungPath) -> PathLimit:
    """Rowwise supremum of a truncated path, with a stabilization report.

    A row counts as growing if it changed within the final quarter of the
    steps; ``stabilized`` is true iff the last two steps agree on every such
    row.  The true limit needs infinitely many steps, so this is a report,
    not a certificate.
    """
    steps = path.steps
    if not steps:
        raise ValueError("empty path")
    width = max(len(s) for s in steps)
    sup = [max(s.row(i) for s in steps) for i in range(1, width + 1)]
    k = len(steps)
    start = max(0, k - max(1, k // 4) - 1)
    growing = sorted({i for i in range(1, width + 1)
                      if steps[start].row(i) != steps[-1].row(i)})
    if k >= 2:
        stab = all(steps[-1].row(i) == steps[-2].row(i) for i in growing)
    else:
        stab = False
    return PathLimit(Partition(sup), tuple(growing), stab)


def staircase_path(k: int) -> YoungPath:
    """Path filling the staircase shapes (1), (2,1), (3,2,1), ... box by box,
    truncated after k steps."""
    steps = []
    cur: list[int] = []
    r = 1
    while len(steps) < k:
        # grow toward (r, r-1, ..., 1) one box at a time, top row first
        target = list(range(r, 0, -1))
        for i in range(r):
            while len(steps) < k and (cur[i] if i < len(cur) else 0) < target[i]:
                if i < len(cur):
                    cur[i] += 1
                else:
                    cur.append(1)
                steps.append(Partition(cur))
        r += 1
    return YoungPath(tuple(steps))


def all_partitions_upto(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def is_antichain(parts) -> bool:
    parts = list(parts)
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            if contains(parts[a], parts[b]) or contains(parts[b], parts[a]):
                return False
    return True


def max_antichain(parts) -> list[Partition]:
    """A maximum antichain of a finite set of partitions under inclusion.

    Dilworth/Koenig: the width equals the number of elements minus a maximum
    matching in the strict comparability bipartite graph; the antichain is
    read off a minimum vertex cover.
    """
    import networkx as nx

    parts = list(dict.fromkeys(Partition(p) for p in parts))
    g = nx.Graph()
    left = [("L", i) for i in range(len(parts))]
    g.add_nodes_from(left)
    g.add_nodes_from(("R", i) for i in range(len(parts)))
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            if i != j and contains(b, a):
                g.add_edge(("L", i), ("R", j))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    cover = nx.bipartite.to_vertex_cover(g, matching, top_nodes=left)
    return [p for i, p in enumerate(parts) if ("L", i) not in cover and ("R", i) not in cover]


def iter_inf_partition_shapes(max_m: int, max_tail: int) -> Iterator[InfPartition]:
    for m in range(max_m + 1):
        for n in range(max_tail + 1):
            if m or n:
                yield hook_shape(m, n)
