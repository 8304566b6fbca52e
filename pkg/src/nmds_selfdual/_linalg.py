"""Exact dense linear algebra over F_q."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from pydantic import Field, model_validator

from nmds_selfdual._exceptions import DimensionMismatch
from nmds_selfdual.types._base import FieldBoundModel

if TYPE_CHECKING:
    from nmds_selfdual._field import GaloisField


class Matrix(FieldBoundModel):
    """A dense ``rows x cols`` matrix over a finite field.

    Entries are canonical element encodings in row-major order. The field
    is attached as a private attribute, so ``model_dump()`` yields exactly
    the exchange form ``{rows, cols, entries}``.
    """

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: tuple[int, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> Matrix:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        return self

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def build(cls, field: GaloisField, rows: int, cols: int, entries: Sequence[int]) -> Matrix:
        """Create a matrix and attach its field.

        Raises:
            DimensionMismatch: If ``entries`` does not hold ``rows * cols``
                values.
            FieldError: If an entry is not an element of ``field``.
        """
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        for value in entries:
            field.check(value)
        return cls.model_construct(rows=rows, cols=cols, entries=tuple(entries))._bind(field)

    @classmethod
    def from_rows(cls, field: GaloisField, rows: Sequence[Sequence[int]]) -> Matrix:
        """Create a matrix from a list of equal-length rows.

        Raises:
            DimensionMismatch: If the rows are ragged.
        """
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("rows have different lengths")
        return cls.build(field, len(rows), width, [v for row in rows for v in row])

    @classmethod
    def identity(cls, field: GaloisField, size: int) -> Matrix:
        return cls.build(field, size, size, [1 if i == j else 0 for i in range(size) for j in range(size)])

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def select_columns(self, indices: Sequence[int]) -> Matrix:
        """The submatrix made of the given columns, in the given order."""
        rows = [[self.at(i, j) for j in indices] for i in range(self.rows)]
        return Matrix.build(self.field, self.rows, len(indices), [v for row in rows for v in row])

    def __mul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------


def _eliminate(field: GaloisField, rows: list[list[int]], ncols: int) -> list[int]:
    """Bring ``rows`` into reduced row echelon form in place.

    Pivots are the first nonzero entry met scanning down each column.
    Returns the pivot columns.
    """
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == len(rows):
            break
        pivot_row = next((r for r in range(top, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[top], rows[pivot_row] = rows[pivot_row], rows[top]
        scale = field.inv(rows[top][col])
        rows[top] = [field.mul(scale, v) for v in rows[top]]
        lead = rows[top]
        for r in range(len(rows)):
            factor = rows[r][col]
            if r != top and factor != 0:
                rows[r] = [field.sub(v, field.mul(factor, w)) for v, w in zip(rows[r], lead)]
        pivots.append(col)
        top += 1
    return pivots


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    rows = matrix.to_rows()
    pivots = _eliminate(matrix.field, rows, matrix.cols)
    return Matrix.from_rows(matrix.field, rows) if rows else matrix, pivots


def rank(matrix: Matrix) -> int:
    """Number of pivots of the reduced row echelon form."""
    return len(rref(matrix)[1])


def det(matrix: Matrix) -> int:
    """Determinant via elimination, tracking row swaps and pivot scales.

    Raises:
        DimensionMismatch: If the matrix is not square.
    """
    if matrix.rows != matrix.cols:
        raise DimensionMismatch(f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")
    field = matrix.field
    rows = matrix.to_rows()
    n = matrix.rows
    result = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            result = field.neg(result)
        pivot = rows[col][col]
        result = field.mul(result, pivot)
        scale = field.inv(pivot)
        for r in range(col + 1, n):
            factor = field.mul(rows[r][col], scale)
            if factor != 0:
                rows[r] = [field.sub(v, field.mul(factor, w)) for v, w in zip(rows[r], rows[col])]
    return result


def nullspace_basis(matrix: Matrix) -> list[tuple[int, ...]]:
    """A basis of ``{v : M v = 0}``, one vector per free column.

    The vector for free column ``f`` has a 1 at ``f`` and zeros at the
    other free columns.
    """
    field = matrix.field
    rows = matrix.to_rows()
    pivots = _eliminate(field, rows, matrix.cols)
    free = [c for c in range(matrix.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        vector = [0] * matrix.cols
        vector[f] = 1
        for i, pc in enumerate(pivots):
            vector[pc] = field.neg(rows[i][f])
        basis.append(tuple(vector))
    return basis


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product ``a @ b``.

    Raises:
        DimensionMismatch: If ``a.cols != b.rows``.
    """
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    field = a.field
    b_columns = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        for col in b_columns:
            entries.append(field.sum(field.mul(x, y) for x, y in zip(row, col)))
    return Matrix.build(field, a.rows, b.cols, entries)


def mat_vec(matrix: Matrix, vector: Sequence[int]) -> tuple[int, ...]:
    """Matrix-vector product ``M v``.

    Raises:
        DimensionMismatch: If ``len(vector) != M.cols``.
    """
    if len(vector) != matrix.cols:
        raise DimensionMismatch(f"vector of length {len(vector)} against {matrix.cols} columns")
    field = matrix.field
    return tuple(
        field.sum(field.mul(x, y) for x, y in zip(matrix.row(i), vector)) for i in range(matrix.rows)
    )


def transpose(matrix: Matrix) -> Matrix:
    entries = [matrix.at(i, j) for j in range(matrix.cols) for i in range(matrix.rows)]
    return Matrix.build(matrix.field, matrix.cols, matrix.rows, entries)
