"""
Independent verification of certificates.

Only ``ratlin`` and ``polyhedron`` are used here, so a verdict never depends
on the code that produced the certificate.
"""

from .polyhedron import contains, dual_contains, is_dual_feasible_dir, is_feasible_dir
from .ratlin import Matrix, dot
from .results import Infeasible, Optimal, Unbounded


def check_infeasible(A: Matrix, b: Matrix, d: Matrix) -> bool:
    """``d >= 0``, ``A^T d = 0`` and ``<b, d> > 0``."""
    return is_dual_feasible_dir(A, d) and dot(b, d) > 0


def check_unbounded(A: Matrix, b: Matrix, c: Matrix, x: Matrix, d: Matrix) -> bool:
    """``x`` feasible, ``A d >= 0`` and ``<c, d> < 0``."""
    return contains(A, b, x) and is_feasible_dir(A, d) and dot(c, d) < 0


def check_optimal(A: Matrix, b: Matrix, c: Matrix, x: Matrix, u: Matrix) -> bool:
    """``x`` feasible, ``u`` dual feasible and ``<c, x> = <b, u>`` exactly."""
    return contains(A, b, x) and dual_contains(A, c, u) and dot(c, x) == dot(b, u)


def check_separation(V: Matrix, x: Matrix, cvec: Matrix) -> bool:
    """``<cvec, v> > <cvec, x>`` for every column ``v`` of ``V``."""
    threshold = dot(cvec, x)
    return all(dot(cvec, Matrix(V.rows, 1, V.column(i))) > threshold for i in range(V.cols))


def check_feasible_point(A: Matrix, b: Matrix, x: Matrix) -> bool:
    return contains(A, b, x)


def check_result(A: Matrix, b: Matrix, c: Matrix, result) -> bool:
    """Dispatch on the variant of a simplex result."""
    if isinstance(result, Infeasible):
        return check_infeasible(A, b, result.d)
    if isinstance(result, Unbounded):
        return check_unbounded(A, b, c, result.x, result.d)
    if isinstance(result, Optimal):
        return check_optimal(A, b, c, result.x, result.u)
    raise TypeError(f'unknown result {result!r}')
