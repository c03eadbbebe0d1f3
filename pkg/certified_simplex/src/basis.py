"""
Prebases, bases and feasible bases of ``A x >= b``, with the quantities the
simplex method reads off a basis: basic point, reduced costs, extended
reduced costs and direction vectors.

Basis indices are kept sorted; "position k" always refers to the k-th
smallest row index of the basis.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Tuple

from .errors import DimensionMismatch, NotFeasible, NotInvertible
from .polyhedron import contains, is_feasible_dir, ray_point
from .ratlin import Matrix, inverse, row_submx, vector


@dataclass(frozen=True)
class PreBasis:
    """
    A strictly increasing tuple of row indices.

    :param indices: The selected rows.
    """
    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(self.indices)
        if any(i < 0 for i in indices) or any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError(f'prebasis indices {indices} are not strictly increasing row numbers')
        object.__setattr__(self, 'indices', indices)

    @classmethod
    def of(cls, rows: Iterable[int]) -> 'PreBasis':
        return cls(tuple(sorted(set(rows))))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class Basis:
    """
    A prebasis whose rows form an invertible matrix, together with the inverse.

    Build it with :func:`make_basis`.
    """
    indices: Tuple[int, ...]
    inverse: Matrix = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, row: int) -> bool:
        return row in self.indices

    def position(self, row: int) -> int:
        """Position of ``row`` in the sorted basis."""
        return self.indices.index(row)


@dataclass(frozen=True)
class FeasibleBasis:
    """A basis whose basic point lies in the polyhedron. Build it with :func:`make_feasible_basis`."""
    basis: Basis

    @property
    def indices(self) -> Tuple[int, ...]:
        return self.basis.indices

    @property
    def inverse(self) -> Matrix:
        return self.basis.inverse


def _as_basis(I) -> Basis:
    return I if isinstance(I, Basis) else I.basis


def make_basis(A: Matrix, pre: PreBasis) -> Basis:
    """
    Check that the rows of ``pre`` form an invertible matrix.

    :raises DimensionMismatch: If ``pre`` does not hold exactly n rows.
    :raises NotInvertible: If ``A_I`` is singular.
    """
    if len(pre) != A.cols:
        raise DimensionMismatch(f'a basis needs {A.cols} rows, got {len(pre)}')
    inv = inverse(row_submx(A, pre.indices))
    if inv is None:
        raise NotInvertible(f'rows {pre.indices} are linearly dependent')
    return Basis(pre.indices, inv)


def replace_row(A: Matrix, I, k: int, row: int) -> Basis:
    """
    The basis obtained by swapping the row at position ``k`` for ``row``.

    The inverse is updated in O(n^2): with ``d`` column k of the old inverse
    and ``w = A_row (A_I)^-1``, column j becomes ``col_j - d (w_j - [j = k]) / w_k``.

    :raises NotInvertible: If the new rows are linearly dependent (``w_k = 0``).
    """
    I = _as_basis(I)
    if row in I.indices:
        raise NotInvertible(f'row {row} is already in the basis {I.indices}')
    inv = I.inverse
    n = inv.rows
    w = (Matrix(1, A.cols, A.row(row)) @ inv).entries
    alpha = w[k]
    if alpha == 0:
        raise NotInvertible(f'row {row} is dependent on rows {I.indices} without row {I.indices[k]}')
    d = inv.column(k)
    columns = []
    for j in range(n):
        factor = (w[j] - (j == k)) / alpha
        col = inv.column(j)
        columns.append(tuple(c - di * factor for c, di in zip(col, d)) if factor else col)

    indices = list(I.indices)
    indices[k] = row
    order = sorted(range(n), key=lambda pos: indices[pos])
    entries = tuple(columns[pos][i] for i in range(n) for pos in order)
    return Basis(tuple(indices[pos] for pos in order), Matrix(n, n, entries))


def make_feasible_basis(A: Matrix, b: Matrix, I) -> FeasibleBasis:
    """
    :raises NotFeasible: If the basic point violates ``A x >= b``.
    """
    I = _as_basis(I)
    if not contains(A, b, point_of_basis(A, b, I)):
        raise NotFeasible(f'basic point of rows {I.indices} is not feasible')
    return FeasibleBasis(I)


def iter_bases(A: Matrix) -> Iterator[Basis]:
    """All bases of ``A``, in lexicographic order of their index sets."""
    for rows in combinations(range(A.rows), A.cols):
        try:
            yield make_basis(A, PreBasis(rows))
        except NotInvertible:
            continue


def point_of_basis(A: Matrix, b: Matrix, I) -> Matrix:
    """The basic point ``(A_I)^-1 b_I``."""
    I = _as_basis(I)
    return I.inverse @ row_submx(b, I.indices)


def reduced_cost(A: Matrix, c: Matrix, I) -> Matrix:
    """The reduced cost vector ``(A_I)^-T c``, indexed by basis position."""
    I = _as_basis(I)
    if c.shape != (A.cols, 1):
        raise DimensionMismatch(f'objective must have length {A.cols}')
    return I.inverse.T @ c


def ext_reduced_cost(A: Matrix, c: Matrix, I) -> Matrix:
    """Reduced costs scattered to length m, zero off the basis."""
    I = _as_basis(I)
    u = reduced_cost(A, c, I).values
    scattered = [Fraction(0)] * A.rows
    for k, row in enumerate(I.indices):
        scattered[row] = u[k]
    return vector(scattered)


def direction(A: Matrix, I, k: int) -> Matrix:
    """Column ``k`` of ``(A_I)^-1``; it satisfies ``A_I d = e_k``."""
    I = _as_basis(I)
    if not 0 <= k < len(I):
        raise IndexError(f'position {k} out of range for a basis of size {len(I)}')
    return vector(I.inverse.column(k))


def check_optimal_basis(A: Matrix, b: Matrix, c: Matrix, I: FeasibleBasis) -> bool:
    """Nonnegative reduced costs certify that the basic point is optimal."""
    return reduced_cost(A, c, I).is_nonneg()


def unbounded_cert_on_basis(A: Matrix, b: Matrix, c: Matrix, I: FeasibleBasis, k: int, bound) -> Matrix:
    """
    Feasible point with objective below ``bound``.

    :param k: Basis position with negative reduced cost whose direction is feasible.
    :raises ValueError: If the position does not witness unboundedness.
    """
    d = direction(A, I, k)
    if reduced_cost(A, c, I)[k, 0] >= 0 or not is_feasible_dir(A, d):
        raise ValueError(f'position {k} of rows {I.indices} is not an unbounded direction')
    return ray_point(c, point_of_basis(A, b, I), d, bound)
