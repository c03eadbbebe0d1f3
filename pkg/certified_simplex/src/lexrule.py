"""
Symbolic perturbation and the lexicographic pivoting rule.

Row ``i`` of the perturbed right-hand side stands for ``b_i - eps^(1 + s(i))``
where ``s`` is a permutation of the rows; a perturbed quantity
``v_0 + sum_k v_k eps^k`` is stored as the tuple ``(v_0, ..., v_m)``. Python
tuples already compare lexicographically, which is exactly the order on
perturbed quantities for an infinitesimal ``eps > 0``.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Sequence, Tuple

from .basis import Basis, FeasibleBasis, direction, reduced_cost, replace_row
from .errors import DimensionMismatch, NotFeasible
from .polyhedron import is_feasible_dir
from .ratlin import Matrix, row_submx

logger = logging.getLogger(__name__)

LexValue = Tuple[Fraction, ...]
_ZERO = Fraction(0)


class LexOrder(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class PerturbedRHS:
    """
    The m x (1+m) matrix ``[b | -P_s]``.

    :param base: The unperturbed right-hand side b.
    :param perm: ``perm[i]`` is ``s(i)``; row i is perturbed by ``-eps^(1 + s(i))``.
    """
    base: Matrix
    perm: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(self.perm)
        if self.base.cols != 1 or len(perm) != self.base.rows:
            raise DimensionMismatch(f'permutation of length {len(perm)} for a right-hand side of shape {self.base.shape}')
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f'{perm} is not a permutation')
        object.__setattr__(self, 'perm', perm)

    @classmethod
    def identity(cls, b: Matrix) -> 'PerturbedRHS':
        return cls(b, tuple(range(b.rows)))

    @property
    def m(self) -> int:
        return self.base.rows

    def row(self, i: int) -> LexValue:
        values = [_ZERO] * (1 + self.m)
        values[0] = self.base[i, 0]
        values[1 + self.perm[i]] = Fraction(-1)
        return tuple(values)

    def matrix(self) -> Matrix:
        return Matrix.from_rows([self.row(i) for i in range(self.m)], cols=1 + self.m)


@dataclass(frozen=True)
class LexFeasibleBasis:
    """A basis that stays feasible under the perturbation. Build it with :func:`make_lex_feasible_basis`."""
    basis: Basis

    @property
    def indices(self) -> Tuple[int, ...]:
        return self.basis.indices

    @property
    def inverse(self) -> Matrix:
        return self.basis.inverse

    def as_feasible(self) -> FeasibleBasis:
        return FeasibleBasis(self.basis)


def _as_basis(I) -> Basis:
    return I if isinstance(I, Basis) else I.basis


def lex_compare(x: Sequence[Fraction], y: Sequence[Fraction]) -> LexOrder:
    """Sign of the first coordinate where ``x`` and ``y`` differ."""
    if len(x) != len(y):
        raise DimensionMismatch(f'cannot compare lex values of lengths {len(x)} and {len(y)}')
    for a, b in zip(x, y):
        if a != b:
            return LexOrder.LT if a < b else LexOrder.GT
    return LexOrder.EQ


def lex_min_seq(values: Sequence[LexValue]) -> LexValue:
    """Lexicographic minimum of a nonempty sequence."""
    values = [tuple(v) for v in values]
    if not values:
        raise ValueError('lex_min_seq of an empty sequence')
    if len({len(v) for v in values}) != 1:
        raise DimensionMismatch('lex values of different lengths')
    return min(values)


def point_of_basis_pert(A: Matrix, bp: PerturbedRHS, I) -> Matrix:
    """The n x (1+m) perturbed basic point ``(A_I)^-1 [b | -P_s]_I``."""
    I = _as_basis(I)
    return I.inverse @ row_submx(bp.matrix(), I.indices)


def _times_pert_point(row: Sequence[Fraction], bp: PerturbedRHS, I: Basis) -> LexValue:
    """
    ``row * point_of_basis_pert(I)`` without forming the perturbed point.

    Column ``1 + s(I[k])`` of the perturbed point is minus column k of the
    inverse and the other perturbation columns vanish, so only ``row (A_I)^-1``
    is needed.
    """
    r = (Matrix(1, len(row), tuple(row)) @ I.inverse).entries
    values = [_ZERO] * (1 + bp.m)
    values[0] = sum((rk * bp.base[i, 0] for rk, i in zip(r, I.indices) if rk), _ZERO)
    for rk, i in zip(r, I.indices):
        values[1 + bp.perm[i]] = -rk
    return tuple(values)


def perturbed_objective(c: Matrix, bp: PerturbedRHS, I) -> LexValue:
    """``c^T`` times the perturbed basic point."""
    return _times_pert_point(c.entries, bp, _as_basis(I))


def is_lex_feasible(A: Matrix, bp: PerturbedRHS, I) -> bool:
    """Every row satisfies ``A_i X >=lex [b | -P_s]_i``."""
    I = _as_basis(I)
    return all(_times_pert_point(A.row(i), bp, I) >= bp.row(i) for i in range(A.rows))


def make_lex_feasible_basis(A: Matrix, bp: PerturbedRHS, I) -> LexFeasibleBasis:
    """
    :raises NotFeasible: If the basis is not lex-feasible.
    """
    I = _as_basis(I)
    if not is_lex_feasible(A, bp, I):
        raise NotFeasible(f'rows {I.indices} are not lex-feasible for permutation {bp.perm}')
    return LexFeasibleBasis(I)


def lex_gap(A: Matrix, bp: PerturbedRHS, I, d: Matrix, j: int) -> LexValue:
    """
    Perturbed step length after which row ``j`` becomes tight along ``d``.

    :raises ZeroDivisionError: If ``A_j d = 0``.
    """
    I = _as_basis(I)
    slope = sum((a * x for a, x in zip(A.row(j), d.entries) if a and x), _ZERO)
    if slope == 0:
        raise ZeroDivisionError(f'row {j} is parallel to the direction')
    slack = _times_pert_point(A.row(j), bp, I)
    return tuple((bj - aj) / slope for bj, aj in zip(bp.row(j), slack))


def entering_row(A: Matrix, bp: PerturbedRHS, I, d: Matrix) -> int:
    """
    Row chosen by the lexicographic rule: smallest index among the rows with
    ``A_j d < 0`` attaining the lex-minimal gap.
    """
    Ad = (A @ d).entries
    candidates = [j for j in range(A.rows) if Ad[j] < 0]
    if not candidates:
        raise ValueError('direction is feasible, no row blocks it')
    gaps = {j: lex_gap(A, bp, I, d, j) for j in candidates}
    min_gap = lex_min_seq(list(gaps.values()))
    attainers = [j for j in candidates if gaps[j] == min_gap]
    # distinct bases have distinct perturbed points, so the minimum is unique
    assert len(attainers) == 1, f'rows {attainers} tie for the minimal lex gap'
    return attainers[0]


def lex_pivot(A: Matrix, bp: PerturbedRHS, c: Matrix, I: LexFeasibleBasis, k: int) -> LexFeasibleBasis:
    """
    Replace the row at position ``k`` by the entering row of the lexicographic rule.

    :param k: Leaving position; its reduced cost must be negative and its
        direction must not be a feasible direction.
    :return: The next lex-feasible basis; the perturbed objective strictly decreases.
    """
    u = reduced_cost(A, c, I)
    d = direction(A, I, k)
    assert u[k, 0] < 0, f'position {k} has nonnegative reduced cost'
    assert not is_feasible_dir(A, d), f'direction at position {k} is feasible'

    leaving = I.indices[k]
    entering = entering_row(A, bp, I, d)
    J = replace_row(A, I, k, entering)
    logger.debug(f'Pivot: row {leaving} leaves, row {entering} enters -> {J.indices}')

    assert is_lex_feasible(A, bp, J), f'rows {J.indices} lost lex-feasibility'
    assert perturbed_objective(c, bp, J) < perturbed_objective(c, bp, I), 'perturbed objective did not decrease'
    return LexFeasibleBasis(J)
