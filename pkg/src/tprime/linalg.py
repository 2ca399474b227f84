"""Exact linear algebra over the rationals and prime fields.

Scalars are python-flint objects (``fmpq`` for Q, ``nmod`` for F_p) and all
heavy elimination is delegated to flint's integer / word-size modular
matrices.  Vectors are plain Python lists of scalars.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import flint


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """The field Q (``p == 0``) or F_p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0:
            if not is_prime(characteristic) or characteristic >= 2**31:
                raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {characteristic}")
        object.__setattr__(self, "characteristic", characteristic)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``"Q"``/``"q"`` or ``"Fp:<p>"``/``"fp:<p>"``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational"):
            return QQ
        if t.startswith("fp:"):
            return GF(int(t[3:]))
        raise ValueError(f"unknown field spec {text!r}")

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            if isinstance(x, flint.fmpq):
                return x
            if isinstance(x, Fraction):
                return flint.fmpq(x.numerator, x.denominator)
            return flint.fmpq(x)
        if isinstance(x, flint.nmod) and x.modulus() == p:
            return x
        if isinstance(x, (Fraction, flint.fmpq)):
            num = int(x.numerator if isinstance(x, Fraction) else x.p)
            den = int(x.denominator if isinstance(x, Fraction) else x.q)
            return flint.nmod(num, p) / flint.nmod(den, p)
        return flint.nmod(int(x), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        """All elements of a prime field."""
        if self.characteristic == 0:
            raise ValueError("Q is infinite")
        return [self(i) for i in range(self.characteristic)]

    def format_scalar(self, x) -> str:
        if self.characteristic == 0:
            x = self(x)
            return f"{int(x.p)}/{int(x.q)}"
        return str(int(self(x)))

    def parse_scalar(self, text):
        if self.characteristic == 0:
            return self(Fraction(str(text)))
        return self(int(text))

    def matrix(self, rows: list[list], ncols: int | None = None):
        """Flint matrix from a list of rows."""
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        flat = [self(v) for row in rows for v in row]
        if self.characteristic == 0:
            return flint.fmpq_mat(nrows, ncols, flat)
        return flint.nmod_mat(nrows, ncols, [int(v) for v in flat], self.characteristic)

    def identity_matrix(self, n: int):
        return self.matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def mat_rows(m) -> list[list]:
    """Rows of a flint matrix as lists of scalars."""
    r, c = m.nrows(), m.ncols()
    e = m.entries()
    return [list(e[i * c:(i + 1) * c]) for i in range(r)]


def rref(field: Field, rows: list[list], ncols: int) -> tuple[list[list], tuple[int, ...]]:
    """Reduced row echelon form; returns nonzero rows and pivot columns."""
    if not rows:
        return [], ()
    m = field.matrix(rows, ncols)
    res = m.rref()
    red, rank = res[0], res[-1]
    out = mat_rows(red)[:rank]
    pivots = []
    for row in out:
        for j, v in enumerate(row):
            if v != 0:
                pivots.append(j)
                break
    return out, tuple(pivots)


def rank(field: Field, rows: list[list], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return field.matrix(rows, ncols).rank()


def left_kernel(field: Field, rows: list[list], ncols: int) -> list[list]:
    """Basis of ``{a : a . M = 0}`` for the matrix with the given rows.

    Over Q the columns are scaled to integers (which leaves the left kernel
    unchanged) and flint's integer nullspace of the transpose is used.
    """
    nrows = len(rows)
    if nrows == 0:
        return []
    if ncols == 0:
        return [[field.one if i == j else field.zero for j in range(nrows)] for i in range(nrows)]
    p = field.characteristic
    if p == 0:
        scale = [1] * ncols
        for row in rows:
            for j, v in enumerate(row):
                if v != 0:
                    q = int(v.q)
                    if q != 1:
                        scale[j] = math.lcm(scale[j], q)
        flat = []
        for j in range(ncols):
            s = scale[j]
            for i in range(nrows):
                v = rows[i][j]
                flat.append(int(v.p) * (s // int(v.q)) if v != 0 else 0)
        mt = flint.fmpz_mat(ncols, nrows, flat)
        x, nullity = mt.nullspace()
        xr = mat_rows(x)
        return [[field(xr[i][k]) for i in range(nrows)] for k in range(nullity)]
    flat = [int(rows[i][j]) for j in range(ncols) for i in range(nrows)]
    mt = flint.nmod_mat(ncols, nrows, flat, p)
    x, nullity = mt.nullspace()
    xr = mat_rows(x)
    return [[field(xr[i][k]) for i in range(nrows)] for k in range(nullity)]


def combine(field: Field, coeffs: list[list], rows: list[list], ncols: int) -> list[list]:
    """The products ``coeffs . rows`` as lists."""
    out = []
    for c in coeffs:
        acc = [field.zero] * ncols
        for a, row in zip(c, rows):
            if a != 0:
                for j, v in enumerate(row):
                    if v != 0:
                        acc[j] += a * v
        out.append(acc)
    return out


class Subspace:
    """Subspace of ``field^ambient`` stored as a reduced row echelon basis.

    Equality is equality of the reduced bases, so two subspaces compare equal
    exactly when they are the same subspace.
    """

    __slots__ = ("field", "ambient", "rows", "pivots", "_key", "_quot")

    def __init__(self, field: Field, ambient: int, rows=(), pivots=(), *, reduced=False):
        self.field = field
        self.ambient = ambient
        if reduced:
            self.rows = tuple(tuple(r) for r in rows)
            self.pivots = tuple(pivots)
        else:
            red, piv = rref(field, [list(r) for r in rows], ambient)
            self.rows = tuple(tuple(r) for r in red)
            self.pivots = piv
        self._key = None
        self._quot = None

    @classmethod
    def span(cls, field: Field, ambient: int, vectors) -> "Subspace":
        return cls(field, ambient, [list(v) for v in vectors])

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), (), reduced=True)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        one, zero = field.one, field.zero
        rows = [[one if i == j else zero for j in range(ambient)] for i in range(ambient)]
        return cls(field, ambient, rows, range(ambient), reduced=True)

    @classmethod
    def coordinate(cls, field: Field, ambient: int, indices) -> "Subspace":
        """Span of the given standard basis vectors."""
        idx = sorted(set(indices))
        one, zero = field.one, field.zero
        rows = []
        for i in idx:
            r = [zero] * ambient
            r[i] = one
            rows.append(r)
        return cls(field, ambient, rows, idx, reduced=True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.ambient - len(self.rows)

    def key(self):
        if self._key is None:
            if self.field.characteristic == 0:
                body = tuple(tuple((int(v.p), int(v.q)) if v != 0 else 0 for v in r) for r in self.rows)
            else:
                body = tuple(tuple(int(v) for v in r) for r in self.rows)
            self._key = (self.field.characteristic, self.ambient, body)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace({self.field!r}, ambient={self.ambient}, dim={self.dim})"

    def reduce(self, vec) -> list:
        """Normal form of ``vec`` modulo the subspace (zero on pivots)."""
        v = [self.field(x) for x in vec]
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c != 0:
                for j, r in enumerate(row):
                    if r != 0:
                        v[j] -= c * r
        return v

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def __contains__(self, vec):
        return self.contains(vec)

    def complement_indices(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in piv)

    def quotient_coords(self, vec) -> list:
        red = self.reduce(vec)
        return [red[j] for j in self.complement_indices()]

    def quotient_matrix(self) -> list[list]:
        """Rows: coordinates of each standard basis vector in the quotient.

        The quotient basis is given by the images of the non-pivot standard
        basis vectors, in increasing order.
        """
        if self._quot is None:
            comp = self.complement_indices()
            pos = {j: k for k, j in enumerate(comp)}
            zero, one = self.field.zero, self.field.one
            q = [None] * self.ambient
            for j in comp:
                r = [zero] * len(comp)
                r[pos[j]] = one
                q[j] = r
            for row, piv in zip(self.rows, self.pivots):
                q[piv] = [-row[j] for j in comp]
            self._quot = q
        return self._quot

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other):
        return self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient, list(self.rows) + list(other.rows))

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        if other.dim == other.ambient:
            return self
        if self.dim == self.ambient:
            return other
        images = [other.quotient_coords(r) for r in self.rows]
        ker = left_kernel(self.field, images, other.codim)
        return Subspace(self.field, self.ambient, combine(self.field, ker, self.rows, self.ambient))

    def _check(self, other):
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different spaces")


def intersect_all(spaces) -> Subspace:
    spaces = list(spaces)
    out = spaces[0]
    for s in spaces[1:]:
        out = out & s
    return out


def kernel_subspace(field: Field, rows: list[list], ncols: int) -> Subspace:
    """Left kernel of a matrix as a Subspace of ``field^len(rows)``."""
    return Subspace(field, len(rows), left_kernel(field, rows, ncols))


def zero_matrix(field: Field, r: int, c: int):
    if field.characteristic == 0:
        return flint.fmpq_mat(r, c)
    return flint.nmod_mat(r, c, field.characteristic)


def int_matrix(field: Field, r: int, c: int, entries):
    """Matrix over ``field`` from a flat list of integers (or fmpz/fmpq)."""
    if field.characteristic == 0:
        return flint.fmpq_mat(r, c, [flint.fmpq(x) if not isinstance(x, flint.fmpq) else x for x in entries])
    p = field.characteristic
    out = []
    for x in entries:
        if isinstance(x, flint.fmpq):
            out.append(int(field(x)))
        else:
            out.append(int(x) % p)
    return flint.nmod_mat(r, c, out, p)


def kron(field: Field, a, b):
    """Kronecker product of two flint matrices."""
    ar, ac, br, bc = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    ea, eb = a.entries(), b.entries()
    out = [field.zero] * (ar * br * ac * bc)
    cols = ac * bc
    for i in range(ar):
        for j in range(ac):
            x = ea[i * ac + j]
            if x == 0:
                continue
            for k in range(br):
                row = (i * br + k) * cols + j * bc
                for l in range(bc):
                    y = eb[k * bc + l]
                    if y != 0:
                        out[row + l] = x * y
    return field.matrix([out[r * cols:(r + 1) * cols] for r in range(ar * br)], cols) if ar * br else zero_matrix(field, 0, cols)
