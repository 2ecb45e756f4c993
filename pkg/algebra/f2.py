"""Bit-packed linear algebra over F2.

Vectors of F2^t are Python ints: coordinate ``i`` (0-based) is bit ``i``.
The low-level ``*_bits`` helpers work on raw ints and are what the search
engines call in their inner loops; ``F2Vector``, ``F2Matrix`` and
``AffineSpace`` wrap them for callers that want dimension checking.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from utils.errors import DimensionCapError, PreconditionError

logger = logging.getLogger(__name__)

MAX_DIM = 64


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(x: int, y: int) -> int:
    """Scalar product of two packed vectors."""
    return (x & y).bit_count() & 1


def check_dim(t: int) -> None:
    if t < 0 or t > MAX_DIM:
        raise DimensionCapError(f"dimension {t} outside 0..{MAX_DIM}", hypothesis="t <= 64")


# ============================================================================
# Raw-int helpers
# ============================================================================


def rank_bits(rows: Sequence[int]) -> int:
    """Rank of a list of packed rows (XOR basis insertion)."""
    basis: dict[int, int] = {}
    for row in rows:
        r = row
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def in_span_bits(basis: Sequence[int], x: int) -> bool:
    """True iff ``x`` is an F2-combination of ``basis``."""
    reduced: dict[int, int] = {}
    for row in basis:
        r = row
        while r:
            top = r.bit_length() - 1
            if top in reduced:
                r ^= reduced[top]
            else:
                reduced[top] = r
                break
    while x:
        top = x.bit_length() - 1
        if top not in reduced:
            return False
        x ^= reduced[top]
    return True


def solve_affine_bits(
    rows: Sequence[int], rhs: Sequence[int], t: int
) -> Optional[tuple[int, list[int]]]:
    """Solve ``row_i . x = rhs_i`` over F2^t by Gauss-Jordan elimination.

    Args:
        rows: Packed coefficient rows
        rhs: Right-hand side bits, one per row
        t: Ambient dimension

    Returns:
        ``(particular, nullspace_basis)`` or ``None`` if the system is inconsistent.
        Free variables are zero in the particular solution; the basis is
        ordered by increasing free column.
    """
    aug = [(r & ((1 << t) - 1)) | ((b & 1) << t) for r, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(t):
        bit = 1 << col
        found = -1
        for i in range(rank, len(aug)):
            if aug[i] & bit:
                found = i
                break
        if found < 0:
            continue
        aug[rank], aug[found] = aug[found], aug[rank]
        pivot_row = aug[rank]
        for i in range(len(aug)):
            if i != rank and aug[i] & bit:
                aug[i] ^= pivot_row
        pivot_cols.append(col)
        rank += 1
        if rank == len(aug):
            break

    rhs_bit = 1 << t
    for i in range(rank, len(aug)):
        if aug[i] & rhs_bit:
            return None

    particular = 0
    for i, col in enumerate(pivot_cols):
        if aug[i] & rhs_bit:
            particular |= 1 << col

    pivots = set(pivot_cols)
    basis = []
    for free in range(t):
        if free in pivots:
            continue
        vec = 1 << free
        for i, col in enumerate(pivot_cols):
            if aug[i] >> free & 1:
                vec |= 1 << col
        basis.append(vec)
    return particular, basis


def gray_points(particular: int, basis: Sequence[int]) -> Iterator[int]:
    """Enumerate ``particular + span(basis)`` in Gray-code order."""
    point = particular
    yield point
    for i in range(1, 1 << len(basis)):
        point ^= basis[(i & -i).bit_length() - 1]
        yield point


def bits_to_string(x: int, t: int) -> str:
    """Coordinate 1 first: character ``i`` is bit ``i``."""
    return "".join("1" if x >> i & 1 else "0" for i in range(t))


def string_to_bits(text: str) -> int:
    value = 0
    for i, ch in enumerate(text):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise ValueError(f"Invalid F2 coordinate '{ch}'")
    return value


# ============================================================================
# Value types
# ============================================================================


@dataclass(frozen=True)
class F2Vector:
    """An element of F2^dim packed into an int."""

    dim: int
    bits: int = 0

    def __post_init__(self):
        check_dim(self.dim)
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"bits {self.bits:#x} exceed dimension {self.dim}")

    @staticmethod
    def from_coords(coords: Sequence[int]) -> "F2Vector":
        bits = 0
        for i, c in enumerate(coords):
            if c & 1:
                bits |= 1 << i
        return F2Vector(len(coords), bits)

    @staticmethod
    def from_string(text: str) -> "F2Vector":
        return F2Vector(len(text), string_to_bits(text))

    @staticmethod
    def unit(dim: int, i: int) -> "F2Vector":
        return F2Vector(dim, 1 << i)

    def _check(self, other: "F2Vector") -> None:
        if other.dim != self.dim:
            raise PreconditionError(f"dimension mismatch {self.dim} vs {other.dim}", hypothesis="equal dims")

    def dot(self, other: "F2Vector") -> int:
        self._check(other)
        return dot(self.bits, other.bits)

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        self._check(other)
        return F2Vector(self.dim, self.bits ^ other.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits >> i & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.dim) if self.bits >> i & 1]

    def is_zero(self) -> bool:
        return self.bits == 0

    def coords(self) -> list[int]:
        return [self.bits >> i & 1 for i in range(self.dim)]

    def __str__(self) -> str:
        return bits_to_string(self.bits, self.dim)


@dataclass(frozen=True)
class F2Matrix:
    """Rectangular matrix given by its rows."""

    rows: tuple[F2Vector, ...]
    ncols: int = field(default=-1)

    def __post_init__(self):
        if self.ncols < 0:
            object.__setattr__(self, "ncols", self.rows[0].dim if self.rows else 0)
        for row in self.rows:
            if row.dim != self.ncols:
                raise PreconditionError("rows of unequal dimension", hypothesis="rectangular matrix")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "F2Matrix":
        return F2Matrix(tuple(F2Vector.from_coords(r) for r in rows), len(rows[0]) if rows else 0)

    @staticmethod
    def from_numpy(array: np.ndarray) -> "F2Matrix":
        array = np.asarray(array, dtype=np.uint8) % 2
        n_rows, n_cols = array.shape
        return F2Matrix(tuple(F2Vector.from_coords(array[i].tolist()) for i in range(n_rows)), n_cols)

    @staticmethod
    def identity(n: int) -> "F2Matrix":
        return F2Matrix(tuple(F2Vector.unit(n, i) for i in range(n)), n)

    @staticmethod
    def from_columns(columns: Sequence[int], dim: int) -> "F2Matrix":
        """Matrix whose ``j``-th column is the packed vector ``columns[j]``."""
        array = np.zeros((dim, len(columns)), dtype=np.uint8)
        for j, col in enumerate(columns):
            for i in range(dim):
                array[i, j] = col >> i & 1
        return F2Matrix.from_numpy(array)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def to_numpy(self) -> np.ndarray:
        array = np.zeros(self.shape, dtype=np.uint8)
        for i, row in enumerate(self.rows):
            array[i] = row.coords()
        return array

    def transpose(self) -> "F2Matrix":
        return F2Matrix.from_numpy(self.to_numpy().T)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "F2Matrix":
        array = self.to_numpy()[np.ix_(list(rows), list(cols))]
        return F2Matrix.from_numpy(array)

    def rank(self) -> int:
        return rank_bits([row.bits for row in self.rows])

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]


@dataclass(frozen=True)
class AffineSpace:
    """Solution set ``particular + span(nullspace_basis)``; ``particular=None`` marks the empty set."""

    dim: int
    particular: Optional[int]
    nullspace_basis: tuple[int, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    @property
    def dimension(self) -> int:
        return -1 if self.is_empty else len(self.nullspace_basis)

    def __len__(self) -> int:
        return 0 if self.is_empty else 1 << len(self.nullspace_basis)

    def __iter__(self) -> Iterator[F2Vector]:
        for bits in self.points_bits():
            yield F2Vector(self.dim, bits)

    def points_bits(self) -> Iterator[int]:
        if self.is_empty:
            return iter(())
        return gray_points(self.particular, self.nullspace_basis)

    def __contains__(self, x: F2Vector) -> bool:
        if self.is_empty:
            return False
        return in_span_bits(self.nullspace_basis, x.bits ^ self.particular)


# ============================================================================
# Operations
# ============================================================================


def rank(matrix: F2Matrix) -> int:
    """Row rank over F2."""
    return matrix.rank()


def solve_affine(rows: Sequence[F2Vector], rhs: Sequence[int], t: int) -> AffineSpace:
    """Exact solution set of ``{row_i . x = rhs_i}``; empty marker when inconsistent."""
    check_dim(t)
    for row in rows:
        if row.dim != t:
            raise PreconditionError(f"row of dimension {row.dim} in a system over F2^{t}", hypothesis="equal dims")
    if len(rows) != len(rhs):
        raise PreconditionError("rows and right-hand side differ in length")
    solved = solve_affine_bits([r.bits for r in rows], list(rhs), t)
    if solved is None:
        return AffineSpace(t, None)
    particular, basis = solved
    return AffineSpace(t, particular, tuple(basis))


def in_span(basis: Sequence[F2Vector], x: F2Vector) -> bool:
    for b in basis:
        if b.dim != x.dim:
            raise PreconditionError("basis and vector differ in dimension", hypothesis="equal dims")
    return in_span_bits([b.bits for b in basis], x.bits)


def gram(U: F2Matrix) -> F2Matrix:
    """Matrix of pairwise scalar products of the columns of ``U`` (``U^T U`` over F2)."""
    array = U.to_numpy().astype(np.int64)
    product = (array.T @ array) % 2
    return F2Matrix.from_numpy(product)


def gram_of_vectors(vectors: Sequence[int], dim: int) -> F2Matrix:
    """Gram matrix of packed vectors (each vector is one column of ``U``)."""
    return gram(F2Matrix.from_columns(vectors, dim))


def ortho_basis_of_complement(u: F2Vector) -> list[F2Vector]:
    """Orthonormal basis of ``u``'s orthogonal complement.

    The support of ``u`` is moved to the front. On the first ``s + 1``
    coordinates (``s`` = weight of ``u``) the columns of the all-ones matrix
    with a zero anti-diagonal form an orthonormal basis whose first column is
    ``u``; the remaining columns plus the unit vectors beyond ``s`` span ``u``'s
    complement.

    Args:
        u: Vector of odd weight, not the all-ones vector, dim >= 2

    Returns:
        ``dim - 1`` vectors, pairwise orthogonal, each with self-product 1,
        each orthogonal to ``u``

    Raises:
        PreconditionError: If the weight of ``u`` is even or equals ``dim``
    """
    t = u.dim
    s = u.weight
    if t < 2:
        raise PreconditionError(f"dimension {t} too small", hypothesis="dim >= 2")
    if s % 2 == 0:
        raise PreconditionError(f"support of size {s} is even", hypothesis="odd support")
    if s == t:
        raise PreconditionError("support is the whole coordinate set", hypothesis="support != dim")

    ones = u.support()
    zeros = [i for i in range(t) if not u[i]]
    perm = ones + zeros  # permuted position p -> original coordinate perm[p]

    basis = []
    for j in range(1, s + 1):
        bits = 0
        for i in range(s + 1):
            if i + j != s:
                bits |= 1 << perm[i]
        basis.append(F2Vector(t, bits))
    for p in range(s + 1, t):
        basis.append(F2Vector(t, 1 << perm[p]))
    return basis
