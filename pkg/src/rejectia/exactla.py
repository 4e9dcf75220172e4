"""Exact dense linear algebra over GF(p) and over the rationals.

All arithmetic in the package funnels through this module.  GF(p) matrices
are numpy int64 arrays with entries reduced into [0, p); rational matrices
are numpy object arrays holding ``fractions.Fraction``.  Results are exact,
there is no tolerance anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import isprime

# int64 products stay exact while cols * (p-1)^2 < 2^63; this cap keeps a
# wide margin for the dimensions this package handles.
_MAX_PRIME = 1 << 20


@dataclass(frozen=True)
class FieldSpec:
    """Prime field GF(p) for char=p, or the rationals for char=0."""

    char: int = 101

    def __post_init__(self):
        if self.char == 0:
            return
        if self.char < 2 or self.char > _MAX_PRIME or not isprime(self.char):
            raise ValueError(f"characteristic must be 0 or a prime < 2^20, got {self.char}")

    @property
    def is_prime_field(self) -> bool:
        return self.char != 0

    def zero(self):
        return 0 if self.char else Fraction(0)

    def one(self):
        return 1 if self.char else Fraction(1)

    def element(self, x):
        if self.char:
            return int(x) % self.char
        return Fraction(x)

    def inv(self, x):
        if self.char:
            x = int(x) % self.char
            if x == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(x, self.char - 2, self.char)
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return Fraction(1, 1) / Fraction(x)


class Mat:
    """Dense matrix over a FieldSpec.  Immutable by convention."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldSpec, a):
        self.field = field
        if field.char:
            arr = np.asarray(a, dtype=np.int64) % field.char
        else:
            arr = np.asarray(a, dtype=object)
            if arr.size:
                arr = np.vectorize(Fraction, otypes=[object])(arr)
        if arr.ndim != 2:
            raise ValueError("Mat is 2-dimensional")
        self.a = arr

    # -- constructors -------------------------------------------------
    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Mat":
        if field.char:
            return Mat(field, np.zeros((rows, cols), dtype=np.int64))
        return Mat(field, np.full((rows, cols), Fraction(0), dtype=object))

    @staticmethod
    def eye(field: FieldSpec, n: int) -> "Mat":
        m = Mat.zeros(field, n, n)
        for i in range(n):
            m.a[i, i] = field.one()
        return m

    # -- shape --------------------------------------------------------
    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "Mat"):
        if self.field != other.field:
            raise ValueError("mixed-field operation rejected")

    def _wrap(self, arr) -> "Mat":
        m = object.__new__(Mat)
        m.field = self.field
        m.a = arr % self.field.char if self.field.char else arr
        return m

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        return self._wrap(self.a + other.a)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        return self._wrap(self.a - other.a)

    def __neg__(self) -> "Mat":
        return self._wrap(-self.a)

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return self._wrap(self.a @ other.a)

    def scale(self, c) -> "Mat":
        return self._wrap(self.a * self.field.element(c))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self.a == other.a))
        )

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    @property
    def T(self) -> "Mat":
        return self._wrap(self.a.T.copy())

    def copy(self) -> "Mat":
        return self._wrap(self.a.copy())

    def is_zero(self) -> bool:
        return bool(np.all(self.a == 0)) if self.a.size else True

    def col(self, j: int) -> "Mat":
        return self._wrap(self.a[:, j : j + 1].copy())

    def tolist(self):
        if self.field.char:
            return self.a.tolist()
        return [[str(x) for x in row] for row in self.a.tolist()]

    def __repr__(self):
        return f"Mat({self.field.char},\n{self.a})"


def hstack(mats: list[Mat]) -> Mat:
    field = mats[0].field
    return mats[0]._wrap(np.hstack([m.a for m in mats]))


def vstack(mats: list[Mat]) -> Mat:
    return mats[0]._wrap(np.vstack([m.a for m in mats]))


def block_diag(field: FieldSpec, mats: list[Mat]) -> Mat:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Mat.zeros(field, rows, cols)
    r = c = 0
    for m in mats:
        out.a[r : r + m.rows, c : c + m.cols] = m.a
        r += m.rows
        c += m.cols
    return out


def rref(m: Mat) -> tuple[Mat, tuple[int, ...], int]:
    """Reduced row-echelon form, pivot columns, rank."""
    p = m.field.char
    a = m.a.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = m.field.inv(a[r, c])
        a[r] = a[r] * inv % p if p else a[r] * inv
        factors = a[:, c].copy()
        factors[r] = 0
        a = a - np.outer(factors, a[r])
        if p:
            a %= p
        pivots.append(c)
        r += 1
    return m._wrap(a), tuple(pivots), r


def rank(m: Mat) -> int:
    return rref(m)[2]


def kernel_basis(m: Mat) -> Mat:
    """Columns form a basis of the null space of m."""
    red, pivots, rk = rref(m)
    cols = m.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    out = Mat.zeros(m.field, cols, len(free))
    for j, fc in enumerate(free):
        out.a[fc, j] = m.field.one()
        for i, pc in enumerate(pivots):
            out.a[pc, j] = -red.a[i, fc]
    if m.field.char:
        out.a %= m.field.char
    return out


def solve(a: Mat, b: Mat) -> Mat | None:
    """Some X with a @ X = b, or None when the system is inconsistent."""
    if a.field != b.field:
        raise ValueError("mixed-field operation rejected")
    if a.rows != b.rows:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    aug = hstack([a, b])
    red, pivots, _ = rref(aug)
    for pc in pivots:
        if pc >= a.cols:
            return None
    x = Mat.zeros(a.field, a.cols, b.cols)
    for i, pc in enumerate(pivots):
        x.a[pc] = red.a[i, a.cols :]
    return x


def column_space(m: Mat) -> Mat:
    """Basis of the column space, in reduced column-echelon coordinates."""
    red, pivots, rk = rref(m.T)
    return m._wrap(red.a[:rk].T.copy())


def in_span(basis: Mat, v: Mat) -> bool:
    """Is every column of v in the column span of basis?"""
    if basis.cols == 0:
        return v.is_zero()
    return solve(basis, v) is not None


def span_union(field: FieldSpec, ambient_rows: int, mats: list[Mat]) -> Mat:
    """Basis of the sum of the column spans, inside a fixed ambient space."""
    mats = [m for m in mats if m.cols > 0]
    if not mats:
        return Mat.zeros(field, ambient_rows, 0)
    return column_space(hstack(mats))


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    x = solve(m, Mat.eye(m.field, m.rows))
    if x is None or not (m @ x == Mat.eye(m.field, m.rows)):
        raise ValueError("matrix is singular")
    return x


def is_invertible(m: Mat) -> bool:
    return m.rows == m.cols and rank(m) == m.rows
