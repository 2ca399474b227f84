"""Thoma parameters, extreme characters of S_infinity and annihilator labels
of spherical and admissible representations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import (ZERO_LABEL, InfPartition, Partition, hook_dimension, hook_member, hook_shape,
                         partitions_of, transpose)
from .rep import character_value, class_size


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class ThomaParam:
    """A point of the Thoma simplex with finitely many nonzero rational
    coordinates.  ``gamma = 1 - sum(alpha) - sum(beta)``."""

    alpha: tuple[Fraction, ...] = ()
    beta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        a = tuple(_frac(x) for x in self.alpha)
        b = tuple(_frac(x) for x in self.beta)
        for name, seq in (("alpha", a), ("beta", b)):
            if any(not 0 < x <= 1 for x in seq):
                raise ValueError(f"{name} entries must lie in (0, 1]")
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{name} must be non-increasing")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if self.gamma < 0:
            raise ValueError("sum of alpha and beta exceeds 1")

    @property
    def gamma(self) -> Fraction:
        return 1 - sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0))

    @property
    def m(self) -> int:
        return len(self.alpha)

    @property
    def n(self) -> int:
        return len(self.beta)

    def power_sum(self, k: int) -> Fraction:
        """p_k(omega); p_1 = 1 always (gamma enters only there)."""
        if k == 1:
            return Fraction(1)
        sgn = 1 if k % 2 else -1
        return sum((x ** k for x in self.alpha), Fraction(0)) + sgn * sum((y ** k for y in self.beta), Fraction(0))

    def to_json(self) -> dict:
        return {"alpha": [str(x) for x in self.alpha], "beta": [str(x) for x in self.beta]}

    @classmethod
    def from_json(cls, data) -> "ThomaParam":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(Fraction(x) for x in data.get("alpha", ())),
                   tuple(Fraction(x) for x in data.get("beta", ())))


def thoma_character(omega: ThomaParam, cycle_type) -> Fraction:
    """Extreme character on a class: the product of p_k over cycle lengths."""
    out = Fraction(1)
    for k in cycle_type:
        if k >= 2:
            out *= omega.power_sum(k)
    return out


def coherent_weight(omega: ThomaParam, lam) -> Fraction:
    """P(lam) = dim(lam) <chi^omega restricted to S_n, chi^lam>."""
    lam = Partition(lam)
    n = lam.size
    total = Fraction(0)
    for c in partitions_of(n):
        total += class_size(tuple(c)) * thoma_character(omega, c) * character_value(tuple(lam), tuple(c))
    return hook_dimension(tuple(lam)) * total / math.factorial(n)


def support_contains(omega: ThomaParam, lam) -> bool:
    """Whether chi^lam occurs in the restriction of chi^omega."""
    if omega.gamma > 0:
        return True
    return hook_member(omega.m, omega.n, Partition(lam))


def support_level(omega: ThomaParam, n: int, method: str = "label") -> frozenset:
    if method == "label":
        return frozenset(l for l in partitions_of(n) if support_contains(omega, l))
    if method == "weights":
        return frozenset(l for l in partitions_of(n) if coherent_weight(omega, l) != 0)
    raise ValueError(f"unknown method {method!r}")


def spherical_annihilator_label(omega: ThomaParam) -> InfPartition:
    """ZERO_LABEL if gamma > 0, else (inf^m, n^inf)."""
    if omega.gamma > 0:
        return ZERO_LABEL
    return hook_shape(omega.m, omega.n)


@dataclass(frozen=True)
class YoungDistribution:
    """Finitely many points of [-1, 1] carrying nonempty partitions."""

    values: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for x, lam in dict(self.values).items():
            x = _frac(x)
            if not -1 <= x <= 1:
                raise ValueError("points must lie in [-1, 1]")
            lam = Partition(lam)
            if lam:
                clean[x] = lam
        object.__setattr__(self, "values", clean)

    @property
    def size(self) -> int:
        return sum(l.size for l in self.values.values())

    def at(self, x) -> Partition:
        return self.values.get(_frac(x), Partition(()))

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))


def validate_admissible(omega: ThomaParam, Lambda: YoungDistribution, M: YoungDistribution) -> bool:
    """Length bounds at x > 0 against alpha multiplicities and at x < 0
    against beta multiplicities (transposed lengths)."""
    if Lambda.size != M.size:
        return False
    points = set(Lambda.values) | set(M.values)
    for x in points:
        if x > 0:
            if len(Lambda.at(x)) + len(M.at(x)) > sum(1 for a in omega.alpha if a == x):
                return False
        elif x < 0:
            if len(transpose(tuple(Lambda.at(x)))) + len(transpose(tuple(M.at(x)))) > \
                    sum(1 for b in omega.beta if b == -x):
                return False
    return True


class InadmissibleError(ValueError):
    pass


def adm_annihilator_label(omega: ThomaParam, Lambda: YoungDistribution, M: YoungDistribution):
    """Left and right annihilator labels of an admissible representation.

    Conditional on the quasi-equivalence of the admissible representation
    with an induced spherical one.  Zero labels when gamma > 0; otherwise
    (inf^m, n + lam_1, n + lam_2, ...) with lam the value at 0.
    """
    if not validate_admissible(omega, Lambda, M):
        raise InadmissibleError("triple is not admissible")
    if omega.gamma > 0:
        return ZERO_LABEL, ZERO_LABEL
    m, n = omega.m, omega.n

    def label(lam: Partition) -> InfPartition:
        return InfPartition(m, tuple(n + x for x in lam), n)

    return label(Lambda.at(0)), label(M.at(0))


def label_to_json(label: InfPartition):
    return "zero" if label.is_zero_label else label.to_json()


def support_path_step(omega: ThomaParam, r: int) -> Partition:
    """(f(r), floor(r a_2), ..., floor(r a_m), q(r)^t) with
    q(r) = (floor(r b_1) - m, ..., floor(r b_n) - m), f(r) filling up to r.

    Defined for gamma = 0 and m >= 1, once r is large enough that the
    result is a partition.
    """
    if omega.gamma != 0 or omega.m == 0:
        raise ValueError("needs gamma = 0 and at least one alpha")
    m = omega.m
    q = [math.floor(r * b) - m for b in omega.beta]
    if any(x < 0 for x in q):
        raise ValueError("r too small")
    middle = [math.floor(r * a) for a in omega.alpha[1:]]
    tail = list(transpose(tuple(x for x in q if x > 0)))
    rest = sum(middle) + sum(tail)
    parts = [r - rest] + middle + tail
    return Partition(parts)


def path_ratio_error(omega: ThomaParam, lam: Partition) -> Fraction:
    """max over rows and columns of |lam_i / r - alpha_i| and
    |lam^t_j / r - beta_j|."""
    r = lam.size
    conj = transpose(tuple(lam))
    err = Fraction(0)
    for i in range(max(len(lam), omega.m)):
        a = omega.alpha[i] if i < omega.m else 0
        err = max(err, abs(Fraction(lam.row(i + 1), r) - a))
    for j in range(max(len(conj), omega.n)):
        b = omega.beta[j] if j < omega.n else 0
        err = max(err, abs(Fraction(conj.row(j + 1), r) - b))
    return err
