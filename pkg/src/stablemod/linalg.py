"""Exact dense linear algebra over prime fields F_p.

Matrices are immutable, dense, int64-backed, entries reduced to [0, p).
Zero-sized matrices (0 x n, n x 0, 0 x 0) are first-class: they occur
constantly as vertex spaces of representations and every operation here
must handle them.

With p <= 2**31 - 1 a single product of two residues fits in int64;
accumulation in matrix products is chunked so that intermediate sums
never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import NonPrimeModulusError

MAX_MODULUS = 2**31 - 1
_INT64_MAX = 2**63 - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p.  Primality is checked at construction."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise NonPrimeModulusError(f"modulus must be an int, got {self.p!r}")
        if not (2 <= self.p <= MAX_MODULUS):
            raise NonPrimeModulusError(f"modulus {self.p} outside [2, 2**31 - 1]")
        if not _is_prime(self.p):
            raise NonPrimeModulusError(f"modulus {self.p} is not prime")

    def scalar(self, value: int) -> "Scalar":
        return Scalar(int(value) % self.p, self)

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(value, self.p - 2, self.p)


@dataclass(frozen=True)
class Scalar:
    """A residue in [0, p).  Arithmetic is exact; nonzero elements invert."""

    value: int
    field: FieldSpec

    def __post_init__(self):
        if not (0 <= self.value < self.field.p):
            raise ValueError(f"residue {self.value} outside [0, {self.field.p})")

    def _check(self, other: "Scalar") -> None:
        if self.field != other.field:
            raise ValueError("scalars over different fields")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value + other.value) % self.field.p, self.field)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value - other.value) % self.field.p, self.field)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value * other.value) % self.field.p, self.field)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value * self.field.inv(other.value)) % self.field.p, self.field)

    def __neg__(self) -> "Scalar":
        return Scalar((-self.value) % self.field.p, self.field)

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)


def _as_int64(entries, rows: int, cols: int, p: int) -> np.ndarray:
    a = np.asarray(entries, dtype=np.int64).reshape(rows, cols)
    return np.mod(a, p)


class Matrix:
    """An immutable rows x cols matrix over a prime field."""

    __slots__ = ("field", "_a", "_hash")

    def __init__(self, field: FieldSpec, rows: int, cols: int,
                 entries: Union[Sequence[int], Iterable[int], np.ndarray] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        entries = list(entries) if not isinstance(entries, np.ndarray) else entries
        if isinstance(entries, list) and not entries and rows * cols == 0:
            a = np.zeros((rows, cols), dtype=np.int64)
        else:
            a = _as_int64(entries, rows, cols, field.p)
            if a.shape != (rows, cols):
                raise ValueError(f"entry count does not match {rows}x{cols}")
        a.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _wrap(cls, field: FieldSpec, a: np.ndarray) -> "Matrix":
        m = cls.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.flags.writeable = False
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "_a", a)
        object.__setattr__(m, "_hash", None)
        return m

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]],
                  cols: Optional[int] = None) -> "Matrix":
        r = len(rows)
        if r == 0:
            return cls(field, 0, 0 if cols is None else cols)
        c = len(rows[0])
        flat = [x for row in rows for x in row]
        return cls(field, r, c, flat)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls._wrap(field, np.eye(n, dtype=np.int64))

    @classmethod
    def column(cls, field: FieldSpec, values: Sequence[int]) -> "Matrix":
        return cls(field, len(values), 1, list(values))

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple:
        return self._a.shape

    @property
    def entries(self) -> tuple:
        """Row-major entries as plain ints."""
        return tuple(int(x) for x in self._a.ravel())

    def entry(self, i: int, j: int) -> int:
        return int(self._a[i, j])

    def scalar_entry(self, i: int, j: int) -> Scalar:
        return Scalar(int(self._a[i, j]), self.field)

    def to_lists(self) -> list:
        return [[int(x) for x in row] for row in self._a]

    def is_zero(self) -> bool:
        return not self._a.any()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.field.p, self.shape, self._a.tobytes()))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix._wrap(self.field, (self._a + other._a) % self.field.p)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return Matrix._wrap(self.field, (self._a - other._a) % self.field.p)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(self.field, (-self._a) % self.field.p)

    def scale(self, c: int) -> "Matrix":
        c %= self.field.p
        return Matrix._wrap(self.field, (self._a * c) % self.field.p)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix._wrap(self.field,
                            _matmul_mod(self._a, other._a, self.field.p))

    def transpose(self) -> "Matrix":
        return Matrix._wrap(self.field, self._a.T.copy())

    def submatrix(self, row_slice, col_slice) -> "Matrix":
        return Matrix._wrap(self.field, self._a[row_slice, col_slice].copy())

    def col(self, j: int) -> "Matrix":
        return Matrix._wrap(self.field, self._a[:, j:j + 1].copy())

    def __repr__(self) -> str:
        return f"Matrix(F_{self.field.p}, {self.rows}x{self.cols}, {self.to_lists()})"


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p without int64 overflow, chunking the inner dimension."""
    k = a.shape[1]
    if k == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # per-term bound (p-1)^2; keep chunk * bound + carry below int64 max
    bound = (p - 1) * (p - 1)
    chunk = max(1, (_INT64_MAX - p) // max(1, bound))
    if k <= chunk:
        return (a @ b) % p
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, k, chunk):
        acc = (acc + a[:, s:s + chunk] @ b[s:s + chunk, :]) % p
    return acc


def hstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("hstack of nothing")
    field = mats[0].field
    return Matrix._wrap(field, np.hstack([m._a for m in mats]))


def vstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("vstack of nothing")
    field = mats[0].field
    return Matrix._wrap(field, np.vstack([m._a for m in mats]))


def block_diag(field: FieldSpec, mats: Sequence[Matrix]) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    a = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for m in mats:
        a[r:r + m.rows, c:c + m.cols] = m._a
        r += m.rows
        c += m.cols
    return Matrix._wrap(field, a)


def kron(a: Matrix, b: Matrix) -> Matrix:
    a._check_field(b)
    return Matrix._wrap(a.field, np.kron(a._a, b._a) % a.field.p)


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple
    rank: int


def rref(a: Matrix) -> RrefResult:
    """Reduced row echelon form with pivot columns in increasing order.

    Row space is preserved; pivot entries are 1 and are the only nonzero
    entries in their columns.  Idempotent: rref(rref(A).matrix) = rref(A).matrix.
    """
    p = a.field.p
    r_mat = a._a.copy()
    rows, cols = r_mat.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(r_mat[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            r_mat[[r, i]] = r_mat[[i, r]]
        inv = pow(int(r_mat[r, c]), p - 2, p)
        r_mat[r] = (r_mat[r] * inv) % p
        factors = r_mat[:, c].copy()
        factors[r] = 0
        if factors.any():
            r_mat -= np.outer(factors, r_mat[r])
            r_mat %= p
        pivots.append(c)
        r += 1
    return RrefResult(Matrix._wrap(a.field, r_mat), tuple(pivots), len(pivots))


def rank(a: Matrix) -> int:
    return rref(a).rank


def nullspace_basis(a: Matrix) -> Matrix:
    """Canonical echelonized basis of {x : Ax = 0}, one column per free variable.

    Free variables are taken in increasing column order with the free
    coordinate set to 1, which makes the result deterministic and lets
    callers compare kernels bit-exactly.
    """
    red, pivots, rk = rref(a)
    p = a.field.p
    cols = a.cols
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-red._a[i, fc]) % p
    return Matrix._wrap(a.field, basis)


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some x with Ax = b, or None when no solution exists.

    b may have any number of columns; the system must be consistent for
    every column.  Free variables are set to 0 (canonical solution).
    """
    if a.field != b.field:
        raise ValueError("field mismatch in solve")
    if a.rows != b.rows:
        raise ValueError(f"row mismatch in solve: {a.rows} vs {b.rows}")
    aug = Matrix._wrap(a.field, np.hstack([a._a, b._a]))
    red, pivots, _ = rref(aug)
    n = a.cols
    if any(pc >= n for pc in pivots):
        return None
    x = np.zeros((n, b.cols), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc, :] = red._a[i, n:]
    return Matrix._wrap(a.field, x)


def image_basis(a: Matrix) -> Matrix:
    """Canonical echelonized basis of the column space; rank(A) columns."""
    red, _, rk = rref(a.transpose())
    return Matrix._wrap(a.field, red._a[:rk, :].T.copy())


class QuotientData(NamedTuple):
    proj: Matrix
    lift: Matrix


def quotient_data(ambient_dim: int, subspace: Matrix) -> QuotientData:
    """Present the quotient of F_p^ambient_dim by a subspace, with a section.

    subspace must have ambient_dim rows and independent columns.  Returns
    (proj, lift) with proj of shape (ambient_dim - k) x ambient_dim,
    ker proj = column span of subspace, and proj @ lift = identity.

    The construction completes the echelonized subspace basis with the
    standard basis vectors at its non-pivot rows, so the output is
    deterministic.
    """
    if subspace.rows != ambient_dim:
        raise ValueError("subspace rows do not match ambient dimension")
    field = subspace.field
    red, pivots, rk = rref(subspace.transpose())
    if rk != subspace.cols:
        raise ValueError("subspace columns are dependent")
    k = rk
    q = ambient_dim - k
    pivot_set = set(pivots)
    free_rows = [r for r in range(ambient_dim) if r not in pivot_set]
    lift = np.zeros((ambient_dim, q), dtype=np.int64)
    for j, fr in enumerate(free_rows):
        lift[fr, j] = 1
    if k == 0:
        return QuotientData(Matrix.identity(field, ambient_dim),
                            Matrix.identity(field, ambient_dim))
    echelon = red._a[:k, :].T  # ambient x k, echelon basis of the subspace
    basis = np.hstack([echelon, lift])
    inv = solve(Matrix._wrap(field, basis), Matrix.identity(field, ambient_dim))
    assert inv is not None, "completed basis must be invertible"
    proj = Matrix._wrap(field, inv._a[k:, :].copy())
    return QuotientData(proj, Matrix._wrap(field, lift))


def subspace_equal(u: Matrix, v: Matrix) -> bool:
    """True iff the column spans coincide (checked by concatenation ranks)."""
    if u.field != v.field:
        raise ValueError("field mismatch in subspace comparison")
    if u.rows != v.rows:
        raise ValueError("ambient dimension mismatch in subspace comparison")
    ru = rank(u)
    rv = rank(v)
    if ru != rv:
        return False
    both = Matrix._wrap(u.field, np.hstack([u._a, v._a]))
    return rank(both) == ru


def subspace_contains(u: Matrix, v: Matrix) -> bool:
    """True iff every column of v lies in the column span of u."""
    if u.rows != v.rows:
        raise ValueError("ambient dimension mismatch in subspace comparison")
    both = Matrix._wrap(u.field, np.hstack([u._a, v._a]))
    return rank(both) == rank(u)
