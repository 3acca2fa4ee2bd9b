"""Parity-patterned matrices over a SuperRing.

Rows and columns are graded: the first block of indices is even, the rest
odd.  An entry at (i, j) must be homogeneous of parity row(i) + col(j), which
is the pattern of even morphisms between free supermodules; under it, matrix
multiplication needs no extra signs.

Determinants over the (commutative) even subring are computed division-free
by dynamic programming over column subsets, so they are valid over rings with
zero divisors; inverses of all-even matrices go through the adjugate, the
only division being by the unit determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .algebra import SuperElement, SuperRing, accumulate_product
from .errors import NotInvertible, ParityPatternViolation, RingMismatch, ShapeMismatch


@dataclass(frozen=True)
class SuperShape:
    """Row and column gradings: (even count, odd count) each."""

    rows: Tuple[int, int]
    cols: Tuple[int, int]

    def __post_init__(self):
        if any(k < 0 for k in self.rows + self.cols):
            raise ValueError(f"negative dimension in shape {self}")

    @property
    def n_rows(self) -> int:
        return self.rows[0] + self.rows[1]

    @property
    def n_cols(self) -> int:
        return self.cols[0] + self.cols[1]

    def row_parity(self, i: int) -> int:
        return 0 if i < self.rows[0] else 1

    def col_parity(self, j: int) -> int:
        return 0 if j < self.cols[0] else 1

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


class SuperMatrix:
    """An immutable matrix of SuperElements satisfying the parity pattern."""

    __slots__ = ("ring", "shape", "entries")

    def __init__(self, ring: SuperRing, shape: SuperShape, entries: Sequence[Sequence[SuperElement]]):
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != shape.n_rows or any(len(row) != shape.n_cols for row in rows):
            raise ShapeMismatch(f"entry array does not match shape {shape}")
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if entry.ring != ring:
                    raise RingMismatch(f"entry ({i}, {j}) lives in a different ring")
                forced = (shape.row_parity(i) + shape.col_parity(j)) % 2
                if not entry.has_parity(forced):
                    kind = "even" if forced == 0 else "odd"
                    raise ParityPatternViolation(f"entry ({i}, {j}) must be {kind}: {entry!r}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SuperMatrix is immutable")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def _raw(cls, ring: SuperRing, shape: SuperShape, rows) -> "SuperMatrix":
        """Skip validation for entries that are pattern-valid by construction."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "shape", shape)
        object.__setattr__(obj, "entries", tuple(tuple(row) for row in rows))
        return obj

    @classmethod
    def identity(cls, ring: SuperRing, m: int, n: int) -> "SuperMatrix":
        size = m + n
        one, zero = ring.one(), ring.zero()
        rows = [[one if i == j else zero for j in range(size)] for i in range(size)]
        return cls._raw(ring, SuperShape((m, n), (m, n)), rows)

    @classmethod
    def zeros(cls, ring: SuperRing, shape: SuperShape) -> "SuperMatrix":
        zero = ring.zero()
        rows = [[zero] * shape.n_cols for _ in range(shape.n_rows)]
        return cls._raw(ring, shape, rows)

    # -- access ----------------------------------------------------------------

    def __getitem__(self, key: Tuple[int, int]) -> SuperElement:
        i, j = key
        return self.entries[i][j]

    @property
    def n_rows(self) -> int:
        return self.shape.n_rows

    @property
    def n_cols(self) -> int:
        return self.shape.n_cols

    def select(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "SuperMatrix":
        """Submatrix on sorted global index lists; grading is inherited."""
        rows = sorted(row_indices)
        cols = sorted(col_indices)
        even_rows = sum(1 for i in rows if self.shape.row_parity(i) == 0)
        even_cols = sum(1 for j in cols if self.shape.col_parity(j) == 0)
        shape = SuperShape((even_rows, len(rows) - even_rows), (even_cols, len(cols) - even_cols))
        data = [[self.entries[i][j] for j in cols] for i in rows]
        return SuperMatrix._raw(self.ring, shape, data)

    def map_entries(self, fn: Callable[[SuperElement], SuperElement]) -> "SuperMatrix":
        return SuperMatrix(self.ring, self.shape, [[fn(e) for e in row] for row in self.entries])

    def body(self) -> "SuperMatrix":
        return self.map_entries(lambda e: e.body())

    # -- arithmetic --------------------------------------------------------------

    def _check_ring(self, other: "SuperMatrix") -> None:
        if self.ring != other.ring:
            raise RingMismatch("matrices live in different rings")

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add shapes {self.shape} and {other.shape}")
        rows = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ]
        return SuperMatrix._raw(self.ring, self.shape, rows)

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self + (-other)

    def __neg__(self) -> "SuperMatrix":
        return SuperMatrix._raw(self.ring, self.shape, [[-e for e in row] for row in self.entries])

    def __mul__(self, other: "SuperMatrix") -> "SuperMatrix":
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._check_ring(other)
        if self.shape.cols != other.shape.rows:
            raise ShapeMismatch(f"cannot multiply shapes {self.shape} and {other.shape}")
        shape = SuperShape(self.shape.rows, other.shape.cols)
        rows = []
        for i in range(self.n_rows):
            my_row = self.entries[i]
            row = []
            for j in range(other.n_cols):
                terms = {}
                for k in range(self.n_cols):
                    left = my_row[k]
                    right = other.entries[k][j]
                    if left.terms and right.terms:
                        accumulate_product(terms, left.terms, right.terms)
                row.append(SuperElement(self.ring, terms))
            rows.append(row)
        return SuperMatrix._raw(self.ring, shape, rows)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.shape, self.entries))

    def __repr__(self):
        body = "; ".join("[" + ", ".join(repr(e) for e in row) + "]" for row in self.entries)
        return f"SuperMatrix({self.shape.rows}x{self.shape.cols}: {body})"

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def inv(self) -> "SuperMatrix":
        return sm_inv(self)


def _require_all_even(matrix: SuperMatrix, context: str) -> None:
    for row in matrix.entries:
        for entry in row:
            if not entry.is_even():
                raise ShapeMismatch(f"{context} requires all-even entries, found {entry!r}")


def det_even(matrix: SuperMatrix) -> SuperElement:
    """Determinant of a square matrix with entries in the even subring.

    Division-free subset dynamic programming: partial[mask] holds the signed
    minor on the processed rows and the column set `mask`.
    """
    if matrix.n_rows != matrix.n_cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    _require_all_even(matrix, "det_even")
    n = matrix.n_rows
    ring = matrix.ring
    partial = {0: ring.one()}
    for r in range(n):
        grown = {}
        row = matrix.entries[r]
        for mask, value in partial.items():
            if value.is_zero():
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = row[j]
                if entry.is_zero():
                    continue
                # new inversions: previously chosen columns to the right of j
                above = bin(mask >> (j + 1)).count("1")
                term = value * entry
                if above % 2:
                    term = -term
                key = mask | bit
                acc = grown.get(key)
                grown[key] = term if acc is None else acc + term
        partial = grown
        if not partial:
            return ring.zero()
    return partial.get((1 << n) - 1, ring.zero())


def inv_even(matrix: SuperMatrix) -> SuperMatrix:
    """Inverse of an all-even square matrix via the adjugate.

    Works whenever the determinant is a unit, which is exactly when the body
    of the determinant is a nonzero constant.
    """
    det = det_even(matrix)
    if not det.is_unit():
        raise NotInvertible(f"determinant is not a unit: body {det.body()!r}")
    det_inv = det.inv()
    n = matrix.n_rows
    if n == 0:
        return matrix
    indices = list(range(n))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            # adjugate: (j, i) cofactor ends up at (i, j)
            minor = matrix.select([r for r in indices if r != j], [c for c in indices if c != i])
            cof = det_even(minor)
            if (i + j) % 2:
                cof = -cof
            row.append(cof * det_inv)
        rows.append(row)
    return SuperMatrix(matrix.ring, matrix.shape, rows)


def block_matrix(grid: Sequence[Sequence[SuperMatrix]]) -> SuperMatrix:
    """Concatenate a grid of blocks; row/col parities must stay even-first."""
    if not grid or not grid[0]:
        raise ShapeMismatch("empty block grid")
    ring = grid[0][0].ring
    row_parities: List[int] = []
    entries: List[List[SuperElement]] = []
    for block_row in grid:
        heights = {b.n_rows for b in block_row}
        if len(heights) != 1:
            raise ShapeMismatch("inconsistent block heights in a grid row")
        for local in range(heights.pop()):
            if len({b.shape.row_parity(local) for b in block_row}) != 1:
                raise ShapeMismatch("blocks in one grid row disagree on row parity")
            entries.append([e for block in block_row for e in block.entries[local]])
            row_parities.append(block_row[0].shape.row_parity(local))
    col_parities: List[int] = []
    for block in grid[0]:
        col_parities.extend(block.shape.col_parity(j) for j in range(block.n_cols))
    if row_parities != sorted(row_parities) or col_parities != sorted(col_parities):
        raise ShapeMismatch("block grid would interleave even and odd indices")
    shape = SuperShape(
        (row_parities.count(0), row_parities.count(1)),
        (col_parities.count(0), col_parities.count(1)),
    )
    return SuperMatrix(ring, shape, entries)


def _parity_blocks(matrix: SuperMatrix):
    """The four parity blocks A, B, C, D of a square (m|n) matrix."""
    m, n = matrix.shape.rows
    even_rows = list(range(m))
    odd_rows = list(range(m, m + n))
    even_cols = list(range(matrix.shape.cols[0]))
    odd_cols = list(range(matrix.shape.cols[0], matrix.n_cols))
    return (
        matrix.select(even_rows, even_cols),
        matrix.select(even_rows, odd_cols),
        matrix.select(odd_rows, even_cols),
        matrix.select(odd_rows, odd_cols),
    )


def is_invertible(matrix: SuperMatrix) -> bool:
    """Body test: both parity-diagonal blocks must have unit body determinant."""
    if not matrix.shape.is_square:
        return False
    a, _, _, d = _parity_blocks(matrix)
    return det_even(a.body()).is_unit() and det_even(d.body()).is_unit()


def sm_inv(matrix: SuperMatrix) -> SuperMatrix:
    """Exact inverse of an invertible square supermatrix via Schur complement."""
    if not matrix.shape.is_square:
        raise ShapeMismatch(f"cannot invert non-square shape {matrix.shape}")
    a, b, c, d = _parity_blocks(matrix)
    try:
        d_inv = inv_even(d)
    except NotInvertible as exc:
        raise NotInvertible(f"odd-odd block is singular: {exc}") from None
    schur = a - b * d_inv * c
    try:
        schur_inv = inv_even(schur)
    except NotInvertible as exc:
        raise NotInvertible(f"even-even block is singular: {exc}") from None
    top_right = -(schur_inv * b * d_inv)
    bottom_left = -(d_inv * c * schur_inv)
    bottom_right = d_inv + d_inv * c * schur_inv * b * d_inv
    return block_matrix([[schur_inv, top_right], [bottom_left, bottom_right]])


def berezinian(matrix: SuperMatrix) -> SuperElement:
    """det(A - B D^-1 C) * det(D)^-1; multiplicative on invertible matrices."""
    if not matrix.shape.is_square:
        raise ShapeMismatch(f"Berezinian of non-square shape {matrix.shape}")
    a, b, c, d = _parity_blocks(matrix)
    det_d = det_even(d)
    if not det_d.is_unit():
        raise NotInvertible(f"odd-odd block is singular: body determinant {det_d.body()!r}")
    d_inv = inv_even(d)
    schur = a - b * d_inv * c
    return det_even(schur) * det_d.inv()
