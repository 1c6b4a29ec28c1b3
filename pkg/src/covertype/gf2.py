"""Dense bit-packed linear algebra over the two-element field.

Rows of a matrix (and whole vectors) are stored as Python integers used
as bit sets, so field addition is a single XOR on machine words.  Every
reduction here returns a canonical (reduced row echelon) result; the
rest of the package relies on that for deterministic tie-breaking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "Gf2Vector",
    "Gf2Matrix",
    "Span",
    "rank",
    "kernel_basis",
    "image_basis",
    "solve",
    "subspace_intersection",
]


@dataclass(frozen=True)
class Gf2Vector:
    """Fixed-length GF(2) vector; bit i of ``bits`` is coordinate i."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise PreconditionError("vector length must be >= 0")
        if self.bits < 0 or self.bits >> self.length != 0:
            raise PreconditionError("bit pattern wider than declared length")

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "Gf2Vector":
        bits = 0
        n = 0
        for c in coords:
            if c & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "Gf2Vector":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise PreconditionError(f"support index {i} out of range")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def unit(cls, length: int, i: int) -> "Gf2Vector":
        return cls.from_support(length, (i,))

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.length != other.length:
            raise PreconditionError("vector lengths differ")
        return Gf2Vector(self.length, self.bits ^ other.bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "Gf2Vector") -> int:
        if self.length != other.length:
            raise PreconditionError("vector lengths differ")
        return (self.bits & other.bits).bit_count() & 1

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def coords(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))


@dataclass(frozen=True)
class Gf2Matrix:
    """rows x cols matrix over GF(2); bit j of row_bits[i] is entry (i, j)."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise PreconditionError("matrix dimensions must be >= 0")
        if len(self.row_bits) != self.rows:
            raise PreconditionError("row count does not match row data")
        for r in self.row_bits:
            if r < 0 or r >> self.cols != 0:
                raise PreconditionError("row wider than declared column count")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "Gf2Matrix":
        packed = []
        width = cols
        for row in rows:
            entries = list(row)
            if width is None:
                width = len(entries)
            if len(entries) != width:
                raise PreconditionError("ragged rows")
            bits = 0
            for j, e in enumerate(entries):
                if e & 1:
                    bits |= 1 << j
            packed.append(bits)
        return cls(len(packed), 0 if width is None else width, tuple(packed))

    @classmethod
    def from_row_vectors(cls, vectors: Sequence[Gf2Vector], length: int | None = None) -> "Gf2Matrix":
        if vectors:
            width = vectors[0].length
            for v in vectors:
                if v.length != width:
                    raise PreconditionError("mixed vector lengths")
            if length is not None and length != width:
                raise PreconditionError("declared length does not match vectors")
        else:
            width = 0 if length is None else length
        return cls(len(vectors), width, tuple(v.bits for v in vectors))

    @classmethod
    def from_columns(cls, vectors: Sequence[Gf2Vector], length: int | None = None) -> "Gf2Matrix":
        return cls.from_row_vectors(vectors, length).transpose()

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.row_bits[i] >> j) & 1

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.cols, self.row_bits[i])

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.row_bits):
            bits |= ((r >> j) & 1) << i
        return Gf2Vector(self.rows, bits)

    def transpose(self) -> "Gf2Matrix":
        out = [0] * self.cols
        for i, r in enumerate(self.row_bits):
            while r:
                lsb = r & -r
                out[lsb.bit_length() - 1] |= 1 << i
                r ^= lsb
        return Gf2Matrix(self.cols, self.rows, tuple(out))

    def __matmul__(self, other):
        if isinstance(other, Gf2Vector):
            if other.length != self.cols:
                raise PreconditionError("vector length does not match column count")
            bits = 0
            for i, r in enumerate(self.row_bits):
                bits |= ((r & other.bits).bit_count() & 1) << i
            return Gf2Vector(self.rows, bits)
        if isinstance(other, Gf2Matrix):
            if self.cols != other.rows:
                raise PreconditionError("inner dimensions differ")
            out = []
            for r in self.row_bits:
                acc = 0
                while r:
                    lsb = r & -r
                    acc ^= other.row_bits[lsb.bit_length() - 1]
                    r ^= lsb
                out.append(acc)
            return Gf2Matrix(self.rows, other.cols, tuple(out))
        return NotImplemented

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.row_bits)


def _rref(row_bits: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [r for r in row_bits]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(rows)):
            if (rows[i] >> c) & 1:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> c) & 1:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Gf2Matrix) -> int:
    return len(_rref(m.row_bits, m.cols)[1])


def kernel_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Canonical basis of the null space {x : m @ x = 0}.

    One basis vector per free column, in ascending column order, each
    with a 1 in its free coordinate; this is the reduced-echelon kernel
    basis, so equal matrices always yield the identical list.
    """
    rows, pivots = _rref(m.row_bits, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for r_idx, p in enumerate(pivots):
            if (rows[r_idx] >> f) & 1:
                bits |= 1 << p
        basis.append(Gf2Vector(m.cols, bits))
    return basis


def image_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Canonical basis of the column space, as reduced-echelon rows."""
    rows, pivots = _rref(m.transpose().row_bits, m.rows)
    return [Gf2Vector(m.rows, rows[i]) for i in range(len(pivots))]


def solve(m: Gf2Matrix, b: Gf2Vector) -> Gf2Vector | None:
    """One solution of m @ x = b with free variables 0, or None."""
    if b.length != m.rows:
        raise PreconditionError("right-hand side length does not match row count")
    # augment each row with the matching coordinate of b in bit position `cols`
    aug = [r | (((b.bits >> i) & 1) << m.cols) for i, r in enumerate(m.row_bits)]
    rows, pivots = _rref(aug, m.cols)
    for i in range(len(pivots), len(rows)):
        if rows[i]:
            return None
    bits = 0
    for r_idx, p in enumerate(pivots):
        if (rows[r_idx] >> m.cols) & 1:
            bits |= 1 << p
    return Gf2Vector(m.cols, bits)


def subspace_intersection(a: Sequence[Gf2Vector], b: Sequence[Gf2Vector]) -> list[Gf2Vector]:
    """Canonical basis of span(a) ∩ span(b).

    Solves A·λ + B·μ = 0 with the spanning vectors as columns and maps
    each kernel element back through A; the collected vectors are then
    row reduced so the answer does not depend on the presentation.
    """
    vecs = list(a) + list(b)
    if not a or not b:
        return []
    n = vecs[0].length
    for v in vecs:
        if v.length != n:
            raise PreconditionError("ambient dimensions differ")
    stacked = Gf2Matrix.from_columns(vecs, n)
    members = []
    for k in kernel_basis(stacked):
        bits = 0
        for j in range(len(a)):
            if (k.bits >> j) & 1:
                bits ^= a[j].bits
        if bits:
            members.append(bits)
    rows, pivots = _rref(members, n)
    return [Gf2Vector(n, rows[i]) for i in range(len(pivots))]


class Span:
    """Incrementally maintained row-reduced span, for membership tests."""

    def __init__(self, length: int, vectors: Iterable[Gf2Vector] = ()):
        self.length = length
        self._rows: list[tuple[int, int]] = []  # (pivot, bits), pivot ascending
        for v in vectors:
            self.add(v)

    def _reduce(self, bits: int) -> int:
        for pivot, row in self._rows:
            if (bits >> pivot) & 1:
                bits ^= row
        return bits

    def contains(self, v: Gf2Vector) -> bool:
        if v.length != self.length:
            raise PreconditionError("ambient dimensions differ")
        return self._reduce(v.bits) == 0

    def add(self, v: Gf2Vector) -> bool:
        """Insert v; True if it was independent of the current span."""
        if v.length != self.length:
            raise PreconditionError("ambient dimensions differ")
        bits = self._reduce(v.bits)
        if bits == 0:
            return False
        pivot = (bits & -bits).bit_length() - 1
        self._rows = [(p, r ^ bits if (r >> pivot) & 1 else r) for p, r in self._rows]
        self._rows.append((pivot, bits))
        self._rows.sort()
        return True

    @property
    def dim(self) -> int:
        return len(self._rows)
