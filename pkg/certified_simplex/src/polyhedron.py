"""
Polyhedra ``{x | A x >= b}``, dual polyhedra ``{u | A^T u = c, u >= 0}`` and
their recession-direction predicates.

Predicates take the raw ``(A, b)`` or ``(A, c)`` pair so that block systems
built by other modules can reuse them.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .ratlin import Matrix, dot, identity, vstack, zero_vector


@dataclass(frozen=True)
class LinearProgram:
    """
    The program ``minimize <c, x> subject to A x >= b``.

    :param A: Constraint matrix, m x n.
    :param b: Right-hand side, column of length m.
    :param c: Objective, column of length n.
    """
    A: Matrix
    b: Matrix
    c: Matrix

    def __post_init__(self):
        if self.b.shape != (self.A.rows, 1) or self.c.shape != (self.A.cols, 1):
            raise DimensionMismatch(
                f'A is {self.A.rows}x{self.A.cols} but b is {self.b.rows}x{self.b.cols} '
                f'and c is {self.c.rows}x{self.c.cols}'
            )

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols


def _check_column(v: Matrix, length: int, name: str) -> None:
    if v.shape != (length, 1):
        raise DimensionMismatch(f'{name} must be a column of length {length}, got {v.rows}x{v.cols}')


def contains(A: Matrix, b: Matrix, x: Matrix) -> bool:
    """True iff ``A x >= b`` entrywise."""
    _check_column(b, A.rows, 'b')
    _check_column(x, A.cols, 'x')
    return all(ax >= bi for ax, bi in zip((A @ x).entries, b.entries))


def dual_contains(A: Matrix, c: Matrix, u: Matrix) -> bool:
    """True iff ``A^T u = c`` exactly and ``u >= 0``."""
    _check_column(c, A.cols, 'c')
    _check_column(u, A.rows, 'u')
    return u.is_nonneg() and A.T @ u == c


def is_feasible_dir(A: Matrix, d: Matrix) -> bool:
    """True iff ``A d >= 0``: every ray ``x + t d`` stays in the polyhedron."""
    _check_column(d, A.cols, 'd')
    return (A @ d).is_nonneg()


def is_dual_feasible_dir(A: Matrix, d: Matrix) -> bool:
    """True iff ``A^T d = 0`` and ``d >= 0``."""
    _check_column(d, A.rows, 'd')
    return d.is_nonneg() and (A.T @ d).is_zero()


def ray_point(c: Matrix, x: Matrix, d: Matrix, bound) -> Matrix:
    """
    Point ``x + t d`` whose objective is below ``bound``.

    With ``t = max(0, (<c,x> - bound) / -<c,d>) + 1`` the objective drops
    strictly under ``bound`` as long as ``<c,d> < 0``.

    :raises ValueError: If ``d`` does not decrease the objective.
    """
    slope = dot(c, d)
    if slope >= 0:
        raise ValueError(f'direction does not decrease the objective (slope {slope})')
    t = max(Fraction(0), (dot(c, x) - Fraction(bound)) / -slope) + 1
    return x + d.scale(t)


def dual_system(A: Matrix, c: Matrix):
    """
    Inequality form of the dual polyhedron.

    :return: ``(D, r)`` with ``D = [A^T; -A^T; I_m]`` and ``r = (c, -c, 0)``,
        so that ``D u >= r`` iff ``dual_contains(A, c, u)``.
    """
    _check_column(c, A.cols, 'c')
    At = A.T
    return vstack(At, -At, identity(A.rows)), vstack(c, -c, zero_vector(A.rows))
