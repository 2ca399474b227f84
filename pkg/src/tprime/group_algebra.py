"""The group algebra k S_n over Q or F_p.

Permutations are 0-based tuples internally (``w[i]`` is the image of ``i``)
and 1-based words at the serialization boundary.  Composition is
``(s * t)(i) = s(t(i))``.
"""

from __future__ import annotations

import itertools
import json
import math
from functools import lru_cache

from .linalg import QQ, Field

Perm = tuple


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All permutations of degree n in lexicographic order of their words."""
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def perm_index(n: int) -> dict[Perm, int]:
    return {p: i for i, p in enumerate(all_perms(n))}


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[i] for i in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def sign(s: Perm) -> int:
    seen = [False] * len(s)
    parity = 0
    for i in range(len(s)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = s[j]
                length += 1
            parity += length - 1
    return -1 if parity % 2 else 1


def cycle_type(s: Perm) -> tuple[int, ...]:
    seen = [False] * len(s)
    lengths = []
    for i in range(len(s)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = s[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def transposition(n: int, i: int, j: int) -> Perm:
    """The transposition of 0-based letters i and j in S_n."""
    w = list(range(n))
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def embed_perm(s: Perm, n: int) -> Perm:
    return tuple(s) + tuple(range(len(s), n))


def shift_concat(s: Perm, t: Perm) -> Perm:
    m = len(s)
    return tuple(s) + tuple(m + x for x in t)


def perm_from_word(word) -> Perm:
    w = tuple(int(x) - 1 for x in word)
    if sorted(w) != list(range(len(w))):
        raise ValueError(f"not a permutation word: {list(word)}")
    return w


def perm_to_word(s: Perm) -> list[int]:
    return [x + 1 for x in s]


def remove_last_letter(s: Perm) -> Perm:
    """Delete the letter n-1 from the cycle notation of s (splicing its
    neighbours together)."""
    n = len(s)
    last = n - 1
    w = list(s[:last])
    if s[last] != last:
        a = s.index(last)
        w[a] = s[last]
    return tuple(w)


class GroupAlgebraElement:
    """A finite combination of permutations of a fixed degree."""

    __slots__ = ("degree", "field", "terms")

    def __init__(self, degree: int, field: Field = QQ, terms=None):
        self.degree = degree
        self.field = field
        clean = {}
        if terms:
            for p, c in (terms.items() if isinstance(terms, dict) else terms):
                p = tuple(p)
                if len(p) != degree:
                    raise ValueError(f"permutation {p} has degree {len(p)}, expected {degree}")
                c = field(c)
                if p in clean:
                    c = clean[p] + c
                if c != 0:
                    clean[p] = c
                else:
                    clean.pop(p, None)
        self.terms = clean

    @classmethod
    def perm(cls, s: Perm, field: Field = QQ, coeff=1) -> "GroupAlgebraElement":
        return cls(len(s), field, {tuple(s): coeff})

    @classmethod
    def one(cls, n: int, field: Field = QQ) -> "GroupAlgebraElement":
        return cls.perm(identity(n), field)

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> "GroupAlgebraElement":
        return cls(n, field)

    @classmethod
    def from_vector(cls, n: int, field: Field, vec) -> "GroupAlgebraElement":
        perms = all_perms(n)
        return cls(n, field, {perms[i]: v for i, v in enumerate(vec) if v != 0})

    def to_vector(self) -> list:
        idx = perm_index(self.degree)
        v = [self.field.zero] * math.factorial(self.degree)
        for p, c in self.terms.items():
            v[idx[p]] = c
        return v

    def _check(self, other):
        if not isinstance(other, GroupAlgebraElement):
            raise TypeError("expected a GroupAlgebraElement")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        if other.field != self.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, self.field.zero) + c
        return GroupAlgebraElement(self.degree, self.field, t)

    def __neg__(self):
        return GroupAlgebraElement(self.degree, self.field, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return GroupAlgebraElement(self.degree, self.field, {p: c * v for p, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement) and self.degree == other.degree
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, self.field, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return f"0[S{self.degree}]"
        parts = []
        for p in sorted(self.terms):
            parts.append(f"{self.field.format_scalar(self.terms[p])}*{perm_to_word(p)}")
        return " + ".join(parts)

    def embed(self, n: int) -> "GroupAlgebraElement":
        """Image under the inclusion S_degree < S_n."""
        if n < self.degree:
            raise ValueError("cannot embed into a smaller degree")
        return GroupAlgebraElement(n, self.field, {embed_perm(p, n): c for p, c in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "field": self.field.name,
            "terms": [{"word": perm_to_word(p), "coeff": self.field.format_scalar(self.terms[p])}
                      for p in sorted(self.terms)],
        }

    @classmethod
    def from_json(cls, data) -> "GroupAlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        field = Field.parse(data["field"])
        terms = {perm_from_word(t["word"]): field.parse_scalar(t["coeff"]) for t in data["terms"]}
        return cls(int(data["degree"]), field, terms)


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    a._check(b)
    out: dict = {}
    for p, c in a.terms.items():
        for q, d in b.terms.items():
            r = compose(p, q)
            out[r] = out.get(r, a.field.zero) + c * d
    return GroupAlgebraElement(a.degree, a.field, out)


def bullet(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """f (x) g in the Young subgroup S_m x S_n of S_{m+n}; g's letters shift by m."""
    if f.field != g.field:
        raise ValueError("field mismatch")
    out = {}
    for p, c in f.terms.items():
        for q, d in g.terms.items():
            out[shift_concat(p, q)] = c * d
    return GroupAlgebraElement(f.degree + g.degree, f.field, out)


def comultiply(x: GroupAlgebraElement) -> dict[tuple[Perm, Perm], object]:
    """Diagonal coproduct: sigma -> sigma (x) sigma."""
    return {(p, p): c for p, c in x.terms.items()}


def tensor_multiply(u: dict, v: dict, field: Field) -> dict:
    """Product in kS_n (x) kS_n of two sparse tensors {(s, t): c}."""
    out: dict = {}
    for (s1, t1), c in u.items():
        for (s2, t2), d in v.items():
            k = (compose(s1, s2), compose(t1, t2))
            out[k] = out.get(k, field.zero) + c * d
    return {k: v for k, v in out.items() if v != 0}


def symmetriser(n: int, field: Field = QQ) -> GroupAlgebraElement:
    if n < 1:
        raise ValueError("n must be positive")
    return GroupAlgebraElement(n, field, {p: 1 for p in all_perms(n)})


def antisymmetriser(n: int, field: Field = QQ) -> GroupAlgebraElement:
    if n < 1:
        raise ValueError("n must be positive")
    return GroupAlgebraElement(n, field, {p: sign(p) for p in all_perms(n)})


def augmentation(x: GroupAlgebraElement):
    total = x.field.zero
    for c in x.terms.values():
        total += c
    return total


def sign_map(x: GroupAlgebraElement):
    total = x.field.zero
    for p, c in x.terms.items():
        total += c if sign(p) == 1 else -c
    return total


def remove_strand(x: GroupAlgebraElement, delta) -> GroupAlgebraElement:
    """Close off the last strand: sigma in S_n gives delta*sigma, otherwise
    the last letter is cut out of its cycle."""
    n1 = x.degree
    if n1 < 2:
        raise ValueError("remove_strand needs degree at least 2")
    field = x.field
    delta = field(delta)
    last = n1 - 1
    out: dict = {}
    for p, c in x.terms.items():
        q = remove_last_letter(p)
        if p[last] == last:
            c = c * delta
        out[q] = out.get(q, field.zero) + c
    return GroupAlgebraElement(n1 - 1, field, out)


def remove_strand_vector(field: Field, n1: int, vec, delta) -> list:
    """remove_strand on coordinate vectors (degree n1 -> n1 - 1)."""
    delta = field(delta)
    perms = all_perms(n1)
    idx = perm_index(n1 - 1)
    out = [field.zero] * math.factorial(n1 - 1)
    last = n1 - 1
    for i, c in enumerate(vec):
        if c != 0:
            p = perms[i]
            j = idx[remove_last_letter(p)]
            out[j] += c * delta if p[last] == last else c
    return out


def adjacent_transposition(n: int, i: int) -> Perm:
    """s_i swapping 0-based letters i-1 and i (1 <= i < n)."""
    return transposition(n, i - 1, i)


def perm_as_adjacent_word(s: Perm) -> list[int]:
    """A reduced word s = s_{i1} s_{i2} ... in adjacent transpositions
    (1-based indices), found by bubble sort."""
    w = list(s)
    word = []
    # right-multiplying by s_i swaps positions i-1, i of the one-line word
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    return word[::-1]
