"""Dense linear algebra over GF(2) on bitset rows.

Vectors are Python ints, bit i being coordinate i, so row addition is XOR
and arbitrary dimensions cost nothing extra.  Matrices keep one int per row.
The homology engine only ever needs ranks, one solution of a linear system,
and affine-subspace intersection, all of which come down to Gaussian
elimination with the highest set bit as pivot.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


def parity(v: int) -> int:
    return v.bit_count() & 1


def vector_from_bits(bits: Sequence[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        if b & 1:
            v |= 1 << i
    return v


def vector_to_bits(v: int, n: int) -> list[int]:
    return [(v >> i) & 1 for i in range(n)]


def reduce_vector(v: int, basis: dict[int, int]) -> int:
    """Reduce v against a pivot-keyed basis (pivot = highest set bit)."""
    while v:
        p = v.bit_length() - 1
        row = basis.get(p)
        if row is None:
            break
        v ^= row
    return v


def insert_vector(v: int, basis: dict[int, int]) -> Optional[int]:
    """Reduce v and insert it if independent; returns its pivot or None."""
    v = reduce_vector(v, basis)
    if v == 0:
        return None
    p = v.bit_length() - 1
    basis[p] = v
    return p


def span_basis(vectors: Iterable[int]) -> dict[int, int]:
    basis: dict[int, int] = {}
    for v in vectors:
        insert_vector(v, basis)
    return basis


class F2Matrix:
    """Matrix over GF(2); rows stored as bitset ints."""

    def __init__(self, rows: Sequence[int], ncols: int):
        rows = list(rows)
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError("row has bits outside the declared width")
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "F2Matrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        return cls([vector_from_bits(r) for r in entries], ncols)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls([1 << i for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_dense(self) -> list[list[int]]:
        return [vector_to_bits(r, self.ncols) for r in self.rows]

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = r.bit_length() - 1
                cols[j] |= 1 << i
                r &= ~(1 << j)
        return F2Matrix(cols, self.nrows)

    def matmul(self, other: "F2Matrix") -> "F2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                j = rr.bit_length() - 1
                acc ^= other.rows[j]
                rr &= ~(1 << j)
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def apply(self, x: int) -> int:
        """Matrix-vector product; x is a bitset over the columns."""
        out = 0
        for i, r in enumerate(self.rows):
            if parity(r & x):
                out |= 1 << i
        return out

    def rank(self) -> int:
        return len(span_basis(self.rows))

    def __eq__(self, other) -> bool:
        return (isinstance(other, F2Matrix)
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols})"


def rank(m: F2Matrix) -> int:
    """Rank over GF(2); elimination on rows."""
    return m.rank()


def solve(a: F2Matrix, b: int | Sequence[int]) -> Optional[int]:
    """Some x with a*x = b, or None if the system is inconsistent.

    Any solution is acceptable to the callers, which only ever ask about
    existence; free variables are set to zero.
    """
    if not isinstance(b, int):
        if len(b) != a.nrows:
            raise ValueError("rhs length does not match row count")
        b = vector_from_bits(b)
    if b >> a.nrows:
        raise ValueError("rhs has bits outside the row count")
    # Eliminate pairs (row, rhs-bit); pivot on the row's highest set bit.
    basis: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(a.rows):
        v, s = row, (b >> i) & 1
        while v:
            p = v.bit_length() - 1
            if p in basis:
                v ^= basis[p][0]
                s ^= basis[p][1]
            else:
                basis[p] = (v, s)
                break
        if v == 0 and s:
            return None
    # Back-substitute in ascending pivot order: each stored row has its
    # pivot as leading bit, every other bit strictly below it.
    x = 0
    for p in sorted(basis):
        row, s = basis[p]
        if s ^ parity(row & x):
            x |= 1 << p
    return x


class F2AffineSpace:
    """Affine subspace base + span(directions) of GF(2)^dim."""

    def __init__(self, base: int, directions: Iterable[int], dim: int):
        self.dim = dim
        self.base = base
        self._basis = span_basis(directions)

    @property
    def directions(self) -> list[int]:
        return [self._basis[p] for p in sorted(self._basis)]

    def rank(self) -> int:
        return len(self._basis)

    def contains(self, v: int) -> bool:
        return reduce_vector(v ^ self.base, self._basis) == 0

    def __repr__(self) -> str:
        return f"F2AffineSpace(dim={self.dim}, rank={self.rank()})"


def affine_intersects(u: F2AffineSpace, v: F2AffineSpace) -> bool:
    """Whether the two affine subspaces share a point.

    u.base + span(U) meets v.base + span(V) iff u.base + v.base lies in
    span(U union V).
    """
    if u.dim != v.dim:
        raise ValueError("affine spaces live in different ambient dimensions")
    basis = dict(u._basis)
    for d in v.directions:
        insert_vector(d, basis)
    return reduce_vector(u.base ^ v.base, basis) == 0
