"""Dense exact matrices over Z and over a number field, plus the exact algorithms on them."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, NamedTuple, Sequence, Tuple

from ..exceptions import (
    DimensionMismatchError,
    MixedFieldError,
    NotSquareError,
    NotSymmetricError,
    PostconditionError,
    PreconditionError,
)
from .number_field import NumberFieldElement, NumberFieldSpec, Scalar


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("Matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("Rows have different lengths")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "IntMatrix":
        rows, cols = list(rows), list(cols)
        return IntMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                sum(a * b for a, b in zip(self.row(i), col))
                for i in range(self.rows)
                for col in columns
            ),
        )

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self[i, j] for i in range(self.rows))

    def _same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("Matrices have different shapes")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(factor * a for a in self.entries))

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatchError("Vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))


@dataclass(frozen=True)
class FieldMatrix:
    """Row-major matrix with entries in one number field."""

    spec: NumberFieldSpec
    rows: int
    cols: int
    entries: Tuple[NumberFieldElement, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        coerced = []
        for entry in self.entries:
            if isinstance(entry, NumberFieldElement) and entry.spec != self.spec:
                raise MixedFieldError(self.spec.label, entry.spec.label)
            coerced.append(self.spec.coerce(entry))
        object.__setattr__(self, "entries", tuple(coerced))

    @classmethod
    def from_rows(cls, spec: NumberFieldSpec, rows: Sequence[Sequence[Scalar]]) -> "FieldMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("Rows have different lengths")
        return cls(spec, len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, spec: NumberFieldSpec, n: int) -> "FieldMatrix":
        return cls.diagonal(spec, [1] * n)

    @classmethod
    def diagonal(cls, spec: NumberFieldSpec, values: Sequence[Scalar]) -> "FieldMatrix":
        n = len(values)
        return cls(spec, n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def from_int(cls, spec: NumberFieldSpec, matrix: IntMatrix) -> "FieldMatrix":
        return cls(spec, matrix.rows, matrix.cols, tuple(matrix.entries))

    def __getitem__(self, index: Tuple[int, int]) -> NumberFieldElement:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[NumberFieldElement, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> List[List[NumberFieldElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.spec,
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.spec != self.spec:
            raise MixedFieldError(self.spec.label, other.spec.label)
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = self.spec.zero()
        out = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(row):
                    if a:
                        acc = acc + a * other[k, j]
                out.append(acc)
        return FieldMatrix(self.spec, self.rows, other.cols, tuple(out))

    def __rmul__(self, scalar: Scalar) -> "FieldMatrix":
        value = self.spec.coerce(scalar)
        return FieldMatrix(self.spec, self.rows, self.cols, tuple(value * e for e in self.entries))

    def __neg__(self) -> "FieldMatrix":
        return FieldMatrix(self.spec, self.rows, self.cols, tuple(-e for e in self.entries))

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.rows != self.rows:
            raise DimensionMismatchError("Horizontal stacking needs equal row counts")
        return FieldMatrix.from_rows(
            self.spec, [self.row(i) + other.row(i) for i in range(self.rows)]
        )

    def vstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.cols != self.cols:
            raise DimensionMismatchError("Vertical stacking needs equal column counts")
        return FieldMatrix(self.spec, self.rows + other.rows, self.cols, self.entries + other.entries)

    def columns(self, start: int, stop: int) -> "FieldMatrix":
        return FieldMatrix.from_rows(
            self.spec, [self.row(i)[start:stop] for i in range(self.rows)]
        )

    def sort_key(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(e.coefficients for e in self.entries)


class EchelonForm(NamedTuple):
    matrix: FieldMatrix
    rank: int
    pivots: Tuple[int, ...]


def _rref_in_place(rows: List[List[Any]]) -> List[int]:
    """Gauss-Jordan elimination on a list of rows; returns pivot columns."""
    pivots: List[int] = []
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inverse = 1 / rows[r][c]
        rows[r] = [v * inverse for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rref(matrix: FieldMatrix) -> EchelonForm:
    """Reduced row echelon form with leftmost pivots and zero rows last."""
    rows = matrix.to_rows()
    pivots = _rref_in_place(rows)
    reduced = FieldMatrix(matrix.spec, matrix.rows, matrix.cols, tuple(e for r in rows for e in r))
    return EchelonForm(reduced, len(pivots), tuple(pivots))


def field_rank(matrix: FieldMatrix) -> int:
    return rref(matrix).rank


def _fraction_rows(matrix: IntMatrix) -> List[List[Fraction]]:
    return [[Fraction(e) for e in matrix.row(i)] for i in range(matrix.rows)]


def int_rank(matrix: IntMatrix) -> int:
    """Rank over Q."""
    return len(_rref_in_place(_fraction_rows(matrix)))


def det_bareiss(matrix: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    if not matrix.is_square:
        raise NotSquareError(matrix.rows, matrix.cols)
    n = matrix.rows
    if n == 0:
        return 1
    m = matrix.to_rows()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """U * A * V = D with U, V unimodular and D diagonal with a divisibility chain."""

    diagonal_matrix: IntMatrix
    left: IntMatrix
    right: IntMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        d = self.diagonal_matrix
        return tuple(d[i, i] for i in range(min(d.rows, d.cols)))


def _swap_rows(m: List[List[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: List[List[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: List[List[int]], target: int, source: int, factor: int) -> None:
    m[target] = [a + factor * b for a, b in zip(m[target], m[source])]


def _add_col(m: List[List[int]], target: int, source: int, factor: int) -> None:
    for row in m:
        row[target] += factor * row[source]


def snf(matrix: IntMatrix, verify: bool = False) -> SmithForm:
    """Smith normal form with transforms.

    Pivots on the entry of least absolute value, clears its row and column, and
    folds in any row whose entries the pivot fails to divide before moving on.
    With ``verify`` the result is checked by :func:`check_smith_form`.
    """
    n_rows, n_cols = matrix.rows, matrix.cols
    m = matrix.to_rows()
    u = IntMatrix.identity(n_rows).to_rows()
    v = IntMatrix.identity(n_cols).to_rows()

    def smallest(cells: Iterable[Tuple[int, int]]) -> Tuple[int, int] | None:
        best = None
        for i, j in cells:
            if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                best = (i, j)
        return best

    def move_to_pivot(t: int, cell: Tuple[int, int]) -> None:
        i, j = cell
        if i != t:
            _swap_rows(m, t, i)
            _swap_rows(u, t, i)
        if j != t:
            _swap_cols(m, t, j)
            _swap_cols(v, t, j)

    t = 0
    while t < min(n_rows, n_cols):
        cell = smallest((i, j) for i in range(t, n_rows) for j in range(t, n_cols))
        if cell is None:
            break
        move_to_pivot(t, cell)
        while True:
            pivot = m[t][t]
            cleared = True
            for i in range(t + 1, n_rows):
                if m[i][t]:
                    q = m[i][t] // pivot
                    _add_row(m, i, t, -q)
                    _add_row(u, i, t, -q)
                    if m[i][t]:
                        cleared = False
            for j in range(t + 1, n_cols):
                if m[t][j]:
                    q = m[t][j] // pivot
                    _add_col(m, j, t, -q)
                    _add_col(v, j, t, -q)
                    if m[t][j]:
                        cleared = False
            if not cleared:
                line = [(i, t) for i in range(t, n_rows)] + [(t, j) for j in range(t + 1, n_cols)]
                move_to_pivot(t, smallest(line))  # type: ignore[arg-type]
                continue
            offender = next(
                (
                    i
                    for i in range(t + 1, n_rows)
                    for j in range(t + 1, n_cols)
                    if m[i][j] % pivot
                ),
                None,
            )
            if offender is None:
                break
            _add_row(m, t, offender, 1)
            _add_row(u, t, offender, 1)
        if m[t][t] < 0:
            m[t] = [-a for a in m[t]]
            u[t] = [-a for a in u[t]]
        t += 1

    result = SmithForm(
        IntMatrix.from_rows(m, n_cols),
        IntMatrix.from_rows(u, n_rows),
        IntMatrix.from_rows(v, n_cols),
    )
    if verify:
        check_smith_form(matrix, result)
    return result


def check_smith_form(matrix: IntMatrix, form: SmithForm) -> None:
    """Raise PostconditionError unless U*A*V = D, U and V are unimodular and D is a Smith form."""
    d = form.diagonal_matrix
    if form.left @ matrix @ form.right != d:
        raise PostconditionError("U*A*V does not reproduce the diagonal form")
    if abs(det_bareiss(form.left)) != 1 or abs(det_bareiss(form.right)) != 1:
        raise PostconditionError("Smith transforms are not unimodular")
    if any(d[i, j] for i in range(d.rows) for j in range(d.cols) if i != j):
        raise PostconditionError("Smith form is not diagonal")
    factors = form.invariant_factors
    for a, b in zip(factors, factors[1:]):
        if a < 0 or (a == 0 and b != 0) or (a and b % a):
            raise PostconditionError(f"Invariant factors {factors} break the divisibility chain")


def rational_kernel_primitive(matrix: IntMatrix) -> List[Tuple[int, ...]]:
    """Basis of ker(A) over Q made of primitive integer vectors.

    Each vector has last nonzero coordinate positive; vectors come in the order
    of the free columns of the reduced echelon form.
    """
    rows = _fraction_rows(matrix)
    pivots = _rref_in_place(rows)
    free = [c for c in range(matrix.cols) if c not in pivots]
    basis: List[Tuple[int, ...]] = []
    for f in free:
        vector = [Fraction(0)] * matrix.cols
        vector[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -rows[r][f]
        scale = math.lcm(*(x.denominator for x in vector))
        ints = [int(x * scale) for x in vector]
        g = math.gcd(*ints)
        ints = [x // g for x in ints]
        last = next(x for x in reversed(ints) if x)
        if last < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def leading_minors(matrix: IntMatrix) -> List[int]:
    if not matrix.is_square:
        raise NotSquareError(matrix.rows, matrix.cols)
    return [
        det_bareiss(matrix.submatrix(range(k), range(k))) for k in range(1, matrix.rows + 1)
    ]


def is_positive_definite(matrix: IntMatrix) -> bool:
    """Sylvester's criterion on a symmetric integer matrix."""
    if not matrix.is_symmetric():
        raise NotSymmetricError()
    return all(minor > 0 for minor in leading_minors(matrix))


class Definiteness(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"


def definiteness(matrix: IntMatrix) -> Definiteness:
    """Classify a symmetric integer matrix by its leading principal minors."""
    if not matrix.is_symmetric():
        raise NotSymmetricError()
    if det_bareiss(matrix) == 0:
        return Definiteness.DEGENERATE
    minors = leading_minors(matrix)
    if all(m > 0 for m in minors):
        return Definiteness.POSITIVE
    if all((m > 0) if k % 2 == 0 else (m < 0) for k, m in enumerate(minors, start=1)):
        return Definiteness.NEGATIVE
    return Definiteness.INDEFINITE


def int_inverse_unimodular(matrix: IntMatrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +-1."""
    if not matrix.is_square:
        raise NotSquareError(matrix.rows, matrix.cols)
    if abs(det_bareiss(matrix)) != 1:
        raise PreconditionError("Matrix is not unimodular", "NOT_UNIMODULAR")
    n = matrix.rows
    rows = [
        [Fraction(e) for e in matrix.row(i)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    _rref_in_place(rows)
    return IntMatrix.from_rows([[int(x) for x in r[n:]] for r in rows], n)
