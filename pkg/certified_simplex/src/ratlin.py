"""
Exact rational scalars and dense matrices.

Every quantity handled by the solver is a ``fractions.Fraction``; matrices are
immutable, row-major and dense. Column vectors are matrices with one column.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch, RationalSyntaxError

Rational = Fraction

_RATIONAL_RE = re.compile(r'^[+-]?[0-9]+(/[0-9]+)?$')
_FLOAT_RE = re.compile(r'^[+-]?(\d+\.\d*|\.\d+|\d+(\.\d*)?[eE][+-]?\d+|inf|nan)$', re.IGNORECASE | re.ASCII)
_ZERO = Fraction(0)


def parse_rational(token: str) -> Fraction:
    """
    Parse a rational in the text syntax ``[sign]digits[/digits]``.

    :param token: The text to parse, e.g. ``-23`` or ``1/3``.
    :return: The exact value.
    :raises RationalSyntaxError: On floats, zero denominators or garbage.
    """
    token = token.strip()
    if _FLOAT_RE.match(token):
        raise RationalSyntaxError(f'floating-point literal "{token}" is not allowed, write an exact rational such as 3/2')
    if not _RATIONAL_RE.match(token):
        raise RationalSyntaxError(f'"{token}" is not a rational number')
    if '/' in token and int(token.split('/')[1]) == 0:
        raise RationalSyntaxError(f'"{token}" has a zero denominator')
    return Fraction(token)


def format_rational(value: Fraction) -> str:
    """Canonical text of a rational: ``-23``, ``1/3``."""
    return str(Fraction(value))


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f'{value!r} is not an exact rational')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f'{value!r} is not an exact rational')


@dataclass(frozen=True)
class Matrix:
    """
    Immutable dense matrix over the rationals.

    :param rows: Number of rows.
    :param cols: Number of columns.
    :param entries: Row-major entries, ``rows * cols`` of them.
    """
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f'negative shape {self.rows}x{self.cols}')
        entries = tuple(_coerce(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(f'{len(entries)} entries for a {self.rows}x{self.cols} matrix')
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> 'Matrix':
        """
        Build a matrix from a list of rows.

        :param rows: The rows.
        :param cols: Column count, required only when ``rows`` is empty.
        """
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch('column count of an empty matrix must be given')
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f'ragged row of length {len(r)}, expected {cols}')
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns: Sequence['Matrix'], rows: int) -> 'Matrix':
        """Matrix whose columns are the given column vectors of length ``rows``."""
        for v in columns:
            if v.shape != (rows, 1):
                raise DimensionMismatch(f'column of shape {v.shape}, expected ({rows}, 1)')
        return cls.from_rows([[v.entries[i] for v in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'Matrix':
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f'index ({i}, {j}) out of range for {self.rows}x{self.cols}')
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        if not 0 <= i < self.rows:
            raise IndexError(f'row {i} out of range for {self.rows} rows')
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        if not 0 <= j < self.cols:
            raise IndexError(f'column {j} out of range for {self.cols} columns')
        return self.entries[j::self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """Entries of a column or row vector."""
        if self.cols != 1 and self.rows != 1:
            raise DimensionMismatch(f'{self.rows}x{self.cols} matrix is not a vector')
        return self.entries

    @property
    def T(self) -> 'Matrix':
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if self.cols != other.rows:
            raise DimensionMismatch(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        columns = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for col in columns:
                out.append(sum((a * b for a, b in zip(r, col) if a and b), _ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def _check_same_shape(self, other: 'Matrix') -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f'shapes {self.shape} and {other.shape} differ')

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'Matrix':
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor) -> 'Matrix':
        factor = _coerce(factor)
        return Matrix(self.rows, self.cols, tuple(factor * a for a in self.entries))

    def is_nonneg(self) -> bool:
        return all(a >= 0 for a in self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)


def vector(values: Iterable) -> Matrix:
    """Column vector from its entries."""
    values = tuple(values)
    return Matrix(len(values), 1, values)


def zero_vector(n: int) -> Matrix:
    return Matrix.zeros(n, 1)


def unit_vector(n: int, k: int) -> Matrix:
    if not 0 <= k < n:
        raise IndexError(f'unit vector index {k} out of range for length {n}')
    return vector(Fraction(int(i == k)) for i in range(n))


def identity(n: int) -> Matrix:
    return Matrix(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))


def vstack(*blocks: Matrix) -> Matrix:
    cols = {b.cols for b in blocks}
    if len(cols) != 1:
        raise DimensionMismatch(f'cannot stack blocks with column counts {sorted(cols)}')
    return Matrix(sum(b.rows for b in blocks), cols.pop(), tuple(v for b in blocks for v in b.entries))


def hstack(*blocks: Matrix) -> Matrix:
    rows = {b.rows for b in blocks}
    if len(rows) != 1:
        raise DimensionMismatch(f'cannot join blocks with row counts {sorted(rows)}')
    n = rows.pop()
    return Matrix(n, sum(b.cols for b in blocks), tuple(v for i in range(n) for b in blocks for v in b.row(i)))


def dot(x: Matrix, y: Matrix) -> Fraction:
    """
    Scalar product of two column vectors.

    :raises DimensionMismatch: If the lengths differ or an operand is not a column.
    """
    if x.cols != 1 or y.cols != 1 or x.rows != y.rows:
        raise DimensionMismatch(f'cannot take the scalar product of {x.shape} and {y.shape}')
    return sum((a * b for a, b in zip(x.entries, y.entries) if a and b), _ZERO)


def row_submx(A: Matrix, I: Iterable[int]) -> Matrix:
    """
    Rows of ``A`` indexed by ``I``, in increasing index order.

    :raises IndexError: If an index is not a row of ``A``.
    """
    indices = sorted(set(I))
    for i in indices:
        if not 0 <= i < A.rows:
            raise IndexError(f'row {i} out of range for {A.rows} rows')
    return Matrix(len(indices), A.cols, tuple(v for i in indices for v in A.row(i)))


def solve(M: Matrix, B: Matrix) -> Optional[Matrix]:
    """
    Solve ``M X = B`` exactly by Gauss-Jordan elimination.

    The pivot of each column is the first nonzero entry at or below the
    diagonal, so the elimination sequence is reproducible.

    :param M: Square n x n matrix.
    :param B: Right-hand sides, n x k.
    :return: The unique X, or None when M is singular.
    """
    if M.rows != M.cols:
        raise DimensionMismatch(f'{M.rows}x{M.cols} system matrix is not square')
    if B.rows != M.rows:
        raise DimensionMismatch(f'right-hand side has {B.rows} rows, expected {M.rows}')
    n, k = M.rows, B.cols
    aug = [list(M.row(i)) + list(B.row(i)) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        prow = [v / lead for v in aug[col]] if lead != 1 else aug[col]
        aug[col] = prow
        for r in range(n):
            factor = aug[r][col]
            if r != col and factor:
                aug[r] = [a - factor * p if p else a for a, p in zip(aug[r], prow)]
    return Matrix(n, k, tuple(v for row in aug for v in row[n:]))


def inverse(M: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, or None when it is singular."""
    return solve(M, identity(M.rows))


def _rref(A: Matrix) -> Tuple[list, list]:
    """Reduced row echelon form and its pivot columns."""
    rows = A.to_rows()
    pivots = []
    r = 0
    for col in range(A.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            factor = rows[i][col]
            if i != r and factor:
                rows[i] = [a - factor * p for a, p in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def independent_rows(A: Matrix) -> Tuple[int, ...]:
    """
    Greedy maximal set of linearly independent rows.

    Rows are scanned by increasing index and a row is kept iff it increases
    the rank of the rows kept so far.
    """
    echelon = []
    chosen = []
    for i in range(A.rows):
        v = list(A.row(i))
        for col, prow in echelon:
            factor = v[col]
            if factor:
                v = [a - factor * p for a, p in zip(v, prow)]
        col = next((j for j, a in enumerate(v) if a), None)
        if col is None:
            continue
        lead = v[col]
        echelon.append((col, [a / lead for a in v]))
        chosen.append(i)
    return tuple(chosen)


def rank(A: Matrix) -> int:
    return len(independent_rows(A))


def kernel_vector(A: Matrix) -> Optional[Matrix]:
    """
    A nonzero vector d with ``A d = 0``, or None if the kernel is trivial.

    The vector sets the first free column of the reduced echelon form to 1.
    """
    if A.cols == 0:
        return None
    rows, pivots = _rref(A)
    free = next((j for j in range(A.cols) if j not in pivots), None)
    if free is None:
        return None
    d = [_ZERO] * A.cols
    d[free] = Fraction(1)
    for row, col in zip(rows, pivots):
        d[col] = -row[free]
    return vector(d)
