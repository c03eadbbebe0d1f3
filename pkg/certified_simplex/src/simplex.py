"""
The general solver and the effective predicates built on it.

``simplex`` substitutes ``x = v - w`` with ``v, w >= 0``, which makes any
polyhedron pointed, and maps the certificates of the split program back.
Feasibility is decided by Phase II on the dual of ``DualLP(A, b, 0)``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .basis import PreBasis, direction, ext_reduced_cost, make_basis, make_feasible_basis
from .phase1 import pointed_simplex
from .phase2 import OptimalBasis, phase2
from .polyhedron import LinearProgram, dual_system, ray_point
from .ratlin import Matrix, dot, hstack, identity, vector, vstack, zero_vector
from .results import Infeasible, Optimal, SimplexResult, Unbounded

logger = logging.getLogger(__name__)

__all__ = [
    'Infeasible', 'Unbounded', 'Optimal', 'SimplexResult',
    'simplex', 'feasible', 'feasible_point', 'infeasibility_certificate',
    'dual_feasible', 'dual_infeasibility_certificate',
    'unbounded', 'bounded', 'opt_value', 'unbounded_witness',
    'DualityPair', 'NotBothFeasible', 'strong_duality_pair',
    'Witness', 'Countermodel', 'Vacuous', 'farkas_implication',
]


def _split_program(A: Matrix, b: Matrix, c: Matrix):
    """The pointed program over ``(v, w)``: ``[[A, -A], [I, 0], [0, I]] (v, w) >= (b, 0, 0)``."""
    n = A.cols
    zero = Matrix.zeros(n, n)
    A_split = vstack(hstack(A, -A), hstack(identity(n), zero), hstack(zero, identity(n)))
    b_split = vstack(b, zero_vector(2 * n))
    c_split = vstack(c, -c)
    return A_split, b_split, c_split


def simplex(A: Matrix, b: Matrix, c: Matrix) -> SimplexResult:
    """
    Solve ``minimize <c, x> subject to A x >= b``.

    :return: ``Infeasible(d)``, ``Unbounded(x, d)`` or ``Optimal(x, u)``; every
        certificate refers to the original ``(A, b, c)``.
    """
    lp = LinearProgram(A, b, c)
    m, n = lp.m, lp.n
    result = pointed_simplex(*_split_program(A, b, c))

    def fold(v: Matrix) -> Matrix:
        return vector(p - q for p, q in zip(v.entries[:n], v.entries[n:]))

    if isinstance(result, Infeasible):
        mapped = Infeasible(vector(result.d.entries[:m]))
    elif isinstance(result, Unbounded):
        mapped = Unbounded(fold(result.x), fold(result.d))
    else:
        mapped = Optimal(fold(result.x), vector(result.u.entries[:m]))
    logger.debug(f'Simplex on a {m}x{n} program: {mapped.status}')
    return mapped


def _dual_phase2(A: Matrix, b: Matrix):
    """Phase II on ``[A^T; -A^T; I_m] u >= 0`` minimizing ``<-b, u>`` from the basic point 0."""
    m, n = A.shape
    D, _ = dual_system(A, zero_vector(n))
    rhs = zero_vector(D.rows)
    bas0 = make_feasible_basis(D, rhs, make_basis(D, PreBasis(tuple(range(2 * n, 2 * n + m)))))
    return D, rhs, phase2(D, rhs, -b, bas0)


def feasible_point(A: Matrix, b: Matrix) -> Optional[Matrix]:
    """
    A point of ``{x | A x >= b}``, or None if it is empty.

    The point is ``w2 - w1`` where ``(w1, w2, w3)`` are the extended reduced
    costs of the optimal basis of the dual feasibility problem.
    """
    n = A.cols
    D, _, result = _dual_phase2(A, b)
    if not isinstance(result, OptimalBasis):
        return None
    w = ext_reduced_cost(D, -b, result.basis).entries
    return vector(w[n + j] - w[j] for j in range(n))


def feasible(A: Matrix, b: Matrix) -> bool:
    """True iff the polyhedron ``{x | A x >= b}`` is nonempty."""
    return feasible_point(A, b) is not None


def infeasibility_certificate(A: Matrix, b: Matrix) -> Optional[Matrix]:
    """A Farkas certificate ``d`` of emptiness, or None if the polyhedron is nonempty."""
    D, _, result = _dual_phase2(A, b)
    if isinstance(result, OptimalBasis):
        return None
    return direction(D, result.basis, result.position)


def dual_feasible(A: Matrix, c: Matrix) -> bool:
    """True iff ``{u | A^T u = c, u >= 0}`` is nonempty."""
    return feasible(*dual_system(A, c))


def dual_infeasibility_certificate(A: Matrix, c: Matrix) -> Optional[Matrix]:
    """
    A direction ``d`` with ``A d >= 0`` and ``<c, d> < 0`` when the dual
    polyhedron is empty, else None.
    """
    n = A.cols
    cert = infeasibility_certificate(*dual_system(A, c))
    if cert is None:
        return None
    w = cert.entries
    return vector(w[n + j] - w[j] for j in range(n))


def unbounded(A: Matrix, b: Matrix, c: Matrix) -> bool:
    return isinstance(simplex(A, b, c), Unbounded)


def bounded(A: Matrix, b: Matrix, c: Matrix) -> bool:
    return isinstance(simplex(A, b, c), Optimal)


def opt_value(A: Matrix, b: Matrix, c: Matrix) -> Optional[Fraction]:
    """The optimal value when it is attained, None when infeasible or unbounded."""
    result = simplex(A, b, c)
    return dot(c, result.x) if isinstance(result, Optimal) else None


def unbounded_witness(A: Matrix, b: Matrix, c: Matrix, bound) -> Optional[Matrix]:
    """A feasible point with objective below ``bound`` when the program is unbounded."""
    result = simplex(A, b, c)
    if not isinstance(result, Unbounded):
        return None
    return ray_point(c, result.x, result.d, bound)


@dataclass(frozen=True)
class DualityPair:
    """Primal and dual optimal points with equal objective values."""
    x: Matrix
    u: Matrix


@dataclass(frozen=True)
class NotBothFeasible:
    """
    At least one of the primal and dual programs is empty.

    :param primal_certificate: Farkas certificate of the primal polyhedron, None if it is nonempty.
    :param dual_certificate: Ray ``d`` with ``A d >= 0``, ``<c, d> < 0`` proving the dual empty, None if it is nonempty.
    """
    primal_certificate: Optional[Matrix]
    dual_certificate: Optional[Matrix]


def strong_duality_pair(A: Matrix, b: Matrix, c: Matrix) -> Union[DualityPair, NotBothFeasible]:
    primal_cert = infeasibility_certificate(A, b)
    dual_cert = dual_infeasibility_certificate(A, c)
    if primal_cert is not None or dual_cert is not None:
        return NotBothFeasible(primal_cert, dual_cert)
    result = simplex(A, b, c)
    if not isinstance(result, Optimal):
        raise AssertionError(f'both programs are feasible but simplex reported {result.status}')
    return DualityPair(result.x, result.u)


@dataclass(frozen=True)
class Witness:
    """``u >= 0``, ``A^T u = c`` and ``<b, u> >= d0``: the implication holds."""
    u: Matrix


@dataclass(frozen=True)
class Countermodel:
    """``A x >= b`` and ``<c, x> < d0``: the implication fails."""
    x: Matrix


@dataclass(frozen=True)
class Vacuous:
    """The premises are contradictory (Farkas certificate ``d``) and ``c`` is not a nonnegative combination of the rows."""
    d: Matrix


def farkas_implication(A: Matrix, b: Matrix, c: Matrix, d0) -> Union[Witness, Countermodel, Vacuous]:
    """
    Decide whether ``A x >= b`` implies ``<c, x> >= d0``.

    :return: ``Witness`` when the implication holds and a multiplier exists,
        ``Countermodel`` when it fails, ``Vacuous`` for contradictory premises
        without a multiplier.
    """
    d0 = Fraction(d0)
    result = simplex(A, b, c)
    if isinstance(result, Optimal):
        if dot(b, result.u) >= d0:
            return Witness(result.u)
        return Countermodel(result.x)
    if isinstance(result, Unbounded):
        return Countermodel(ray_point(c, result.x, result.d, d0))

    farkas = result.d
    u0 = feasible_point(*dual_system(A, c))
    if u0 is None:
        return Vacuous(farkas)
    t = max(Fraction(0), (d0 - dot(b, u0)) / dot(b, farkas))
    return Witness(u0 + farkas.scale(t))
