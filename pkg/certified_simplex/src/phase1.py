"""
Phase I for pointed polyhedra and the resulting ``pointed_simplex``.

An arbitrary basis ``bas0`` is turned into a feasible one by solving an
extended program over ``(x, y)`` in which every row violated at the basic
point of ``bas0`` is relaxed by its own slack variable ``y_k >= 0``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .basis import (FeasibleBasis, PreBasis, direction, ext_reduced_cost, make_basis,
                    make_feasible_basis, point_of_basis)
from .errors import DimensionMismatch, NotFeasible, NotPointed, PolyhedraError
from .phase2 import OptimalBasis, phase2
from .polyhedron import contains
from .ratlin import Matrix, dot, independent_rows, kernel_vector, rank, row_submx, vector
from .results import Infeasible, Optimal, SimplexResult, Unbounded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Phase1Problem:
    """
    The extended program ``minimize <e, y - A_K x>`` subject to
    ``A_K x <= b_K + y``, ``A_L x >= b_L``, ``y >= 0``.

    :param K: Rows violated at the basic point of ``bas0``, increasing.
    :param A_ext: (m+p) x (n+p) constraint matrix, original rows first in their original order.
    :param b_ext: Extended right-hand side.
    :param c_ext: Extended objective.
    :param M_ext: Lower bound ``<e, -b_K>`` of the extended objective.
    :param bas0_ext: ``bas0`` plus the rows of ``y >= 0``; its basic point is ``(x0, 0)``.
    """
    K: Tuple[int, ...]
    A_ext: Matrix
    b_ext: Matrix
    c_ext: Matrix
    M_ext: Fraction
    bas0_ext: FeasibleBasis

    @property
    def p(self) -> int:
        return len(self.K)


def build_phase1(A: Matrix, b: Matrix, bas0) -> Phase1Problem:
    """
    Build the extended program of Phase I around a basis of ``A``.

    :param A: Constraint matrix, m x n.
    :param b: Right-hand side.
    :param bas0: Any basis of ``A``.
    """
    m, n = A.shape
    x0 = point_of_basis(A, b, bas0)
    Ax0 = (A @ x0).entries
    K = tuple(i for i in range(m) if Ax0[i] < b[i, 0])
    p = len(K)
    slack_of = {row: k for k, row in enumerate(K)}

    rows, rhs = [], []
    for i in range(m):
        if i in slack_of:
            rows.append([-a for a in A.row(i)] + [Fraction(int(k == slack_of[i])) for k in range(p)])
            rhs.append(-b[i, 0])
        else:
            rows.append(list(A.row(i)) + [Fraction(0)] * p)
            rhs.append(b[i, 0])
    for k in range(p):
        rows.append([Fraction(0)] * n + [Fraction(int(j == k)) for j in range(p)])
        rhs.append(Fraction(0))

    A_ext = Matrix.from_rows(rows, cols=n + p)
    b_ext = vector(rhs)
    sum_K = [sum((A[i, j] for i in K), Fraction(0)) for j in range(n)]
    c_ext = vector([-s for s in sum_K] + [Fraction(1)] * p)
    M_ext = -sum((b[i, 0] for i in K), Fraction(0))

    basis_ext = make_basis(A_ext, PreBasis(tuple(bas0.indices) + tuple(range(m, m + p))))
    bas0_ext = make_feasible_basis(A_ext, b_ext, basis_ext)
    logger.debug(f'Phase I: {p} violated rows {K}, extended system {A_ext.rows}x{A_ext.cols}')
    return Phase1Problem(K, A_ext, b_ext, c_ext, M_ext, bas0_ext)


def cext_lower_bound_check(problem: Phase1Problem, z: Matrix) -> bool:
    """``<c_ext, z> >= M_ext``; holds for every point of the extended polyhedron."""
    return dot(problem.c_ext, z) >= problem.M_ext


def dual_from_ext(K: Tuple[int, ...], u: Matrix) -> Matrix:
    """
    Infeasibility certificate of ``A x >= b`` from a dual point of the extended program.

    Entry i is ``1 - u_i`` for ``i`` in ``K`` and ``u_i`` otherwise; only the
    first m entries of ``u`` are read.
    """
    m = u.rows - len(K)
    if m < 0:
        raise DimensionMismatch(f'dual vector of length {u.rows} is shorter than |K| = {len(K)}')
    K = set(K)
    return vector(1 - u[i, 0] if i in K else u[i, 0] for i in range(m))


def extract_feasible_basis(A: Matrix, b: Matrix, x: Matrix) -> FeasibleBasis:
    """
    Move a feasible point to a vertex and return its basis.

    While the active rows have rank below n, step along a kernel direction of
    the active rows (oriented so that some row blocks it) until a new row
    becomes tight; that row is independent of the previously active ones.

    :raises NotPointed: If ``rank(A) < n``.
    :raises NotFeasible: If ``x`` is not in the polyhedron.
    """
    n = A.cols
    if rank(A) < n:
        raise NotPointed(f'rank of the {A.rows}x{n} constraint matrix is below {n}')
    if not contains(A, b, x):
        raise NotFeasible('purification needs a feasible starting point')

    moves = 0
    while True:
        Ax = (A @ x).entries
        active = [i for i in range(A.rows) if Ax[i] == b[i, 0]]
        A_active = row_submx(A, active)
        d = kernel_vector(A_active)
        if d is None:
            break
        Ad = (A @ d).entries
        if all(v >= 0 for v in Ad):
            d, Ad = -d, [-v for v in Ad]
        step = min((b[j, 0] - Ax[j]) / Ad[j] for j in range(A.rows) if Ad[j] < 0)
        x = x + d.scale(step)
        moves += 1
        logger.debug(f'Purification move {moves}: step {step} along {list(d.entries)}')

    rows = [active[k] for k in independent_rows(A_active)]
    return make_feasible_basis(A, b, make_basis(A, PreBasis(tuple(rows))))


def pointed_simplex(A: Matrix, b: Matrix, c: Matrix) -> SimplexResult:
    """
    Solve ``minimize <c, x> subject to A x >= b`` when ``rank(A) = n``.

    :raises NotPointed: If the rank condition fails.
    """
    n = A.cols
    rows = independent_rows(A)
    if len(rows) < n:
        raise NotPointed(f'rank {len(rows)} of the constraint matrix is below {n}')
    bas0 = make_basis(A, PreBasis(rows))
    problem = build_phase1(A, b, bas0)

    if problem.p == 0:
        start = FeasibleBasis(bas0)
    else:
        ext = phase2(problem.A_ext, problem.b_ext, problem.c_ext, problem.bas0_ext)
        if not isinstance(ext, OptimalBasis):
            raise PolyhedraError('the Phase I program is bounded below and cannot be unbounded')
        z = point_of_basis(problem.A_ext, problem.b_ext, ext.basis)
        value = dot(problem.c_ext, z)
        if value > problem.M_ext:
            logger.debug(f'Phase I optimum {value} exceeds {problem.M_ext}: infeasible')
            u = ext_reduced_cost(problem.A_ext, problem.c_ext, ext.basis)
            return Infeasible(dual_from_ext(problem.K, u))
        start = extract_feasible_basis(A, b, vector(z.entries[:n]))

    result = phase2(A, b, c, start)
    x = point_of_basis(A, b, result.basis)
    if isinstance(result, OptimalBasis):
        return Optimal(x, ext_reduced_cost(A, c, result.basis))
    return Unbounded(x, direction(A, result.basis, result.position))
