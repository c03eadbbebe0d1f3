"""
Phase II of the simplex method with the lexicographic rule.

Starting from a feasible basis, a perturbation making it lex-feasible is
built, then ``basic_step`` is iterated until the reduced costs are
nonnegative or an improving feasible direction shows up.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Tuple, Union

from .basis import FeasibleBasis, direction, reduced_cost
from .errors import IterationBudgetExceeded
from .lexrule import LexFeasibleBasis, PerturbedRHS, is_lex_feasible, lex_pivot
from .polyhedron import is_feasible_dir
from .ratlin import Matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimalBasis:
    """Phase II stopped on a basis with nonnegative reduced costs."""
    basis: FeasibleBasis
    path: Tuple[Tuple[int, ...], ...] = ()

    @property
    def pivots(self) -> int:
        return max(len(self.path) - 1, 0)


@dataclass(frozen=True)
class UnboundedAt:
    """Phase II found position ``position`` with negative reduced cost and a feasible direction."""
    basis: FeasibleBasis
    position: int
    path: Tuple[Tuple[int, ...], ...] = ()

    @property
    def pivots(self) -> int:
        return max(len(self.path) - 1, 0)


Phase2Result = Union[OptimalBasis, UnboundedAt]


@dataclass(frozen=True)
class NextBasis:
    basis: LexFeasibleBasis


@dataclass(frozen=True)
class Final:
    result: Phase2Result


def feasible_to_lex_feasible(A: Matrix, b: Matrix, bas0: FeasibleBasis) -> PerturbedRHS:
    """
    Perturbation under which ``bas0`` is lex-feasible.

    Rows outside the basis get the smallest exponents, in increasing row
    order, and the basis rows the largest. For a tight row outside the basis
    the first nonzero perturbed slack is then +1 in its own column.
    """
    m = A.rows
    outside = [i for i in range(m) if i not in bas0.indices]
    order = outside + list(bas0.indices)
    perm = [0] * m
    for exponent, row in enumerate(order):
        perm[row] = exponent
    bp = PerturbedRHS(b, tuple(perm))
    if not is_lex_feasible(A, bp, bas0.basis):
        raise AssertionError(f'rows {bas0.indices} are not lex-feasible under the constructed permutation')
    return bp


def basic_step(A: Matrix, bp: PerturbedRHS, c: Matrix, I: LexFeasibleBasis) -> Union[NextBasis, Final]:
    """
    One iteration: stop on nonnegative reduced costs or a feasible improving
    direction, otherwise pivot on the smallest position with negative reduced cost.
    """
    u = reduced_cost(A, c, I.basis).values
    k = next((pos for pos, value in enumerate(u) if value < 0), None)
    if k is None:
        return Final(OptimalBasis(I.as_feasible()))
    if is_feasible_dir(A, direction(A, I.basis, k)):
        return Final(UnboundedAt(I.as_feasible(), k))
    return NextBasis(lex_pivot(A, bp, c, I, k))


def phase2(A: Matrix, b: Matrix, c: Matrix, bas0: FeasibleBasis) -> Phase2Result:
    """
    Run Phase II from a feasible basis.

    :param A: Constraint matrix.
    :param b: Right-hand side.
    :param c: Objective.
    :param bas0: Starting feasible basis.
    :return: ``OptimalBasis`` or ``UnboundedAt``, with the visited bases in ``path``.
    :raises IterationBudgetExceeded: If more pivots than bases were made.
    """
    bp = feasible_to_lex_feasible(A, b, bas0)
    budget = comb(A.rows, A.cols)
    current = LexFeasibleBasis(bas0.basis)
    path = [current.indices]

    while True:
        step = basic_step(A, bp, c, current)
        if isinstance(step, Final):
            result = step.result
            logger.debug(f'Phase II finished after {len(path) - 1} pivots: {type(result).__name__} at {result.basis.indices}')
            if isinstance(result, OptimalBasis):
                return OptimalBasis(result.basis, tuple(path))
            return UnboundedAt(result.basis, result.position, tuple(path))

        current = step.basis
        path.append(current.indices)
        if len(path) - 1 > budget:
            raise IterationBudgetExceeded(f'{len(path) - 1} pivots exceed the {budget} bases of a {A.rows}x{A.cols} system')
