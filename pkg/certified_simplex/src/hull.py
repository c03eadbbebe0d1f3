"""
Convex hulls of finite point sets, separating hyperplanes, vertex
enumeration and the Minkowski check.

A point cloud is an n x p matrix whose columns are the points.
"""

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from .basis import iter_bases, point_of_basis
from .errors import DimensionMismatch, NotBounded
from .polyhedron import contains
from .ratlin import Matrix, format_rational, identity, unit_vector, vector, vstack
from .simplex import bounded, feasible, infeasibility_certificate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InHull:
    """Returned by :func:`separation_hyperplane` when no separator exists."""


def hull_system(V: Matrix, x: Matrix) -> Tuple[Matrix, Matrix]:
    """
    Inequalities over ``lam`` in R^p describing ``V lam = x``, ``sum(lam) = 1``, ``lam >= 0``.

    :return: ``([V; -V; e^T; -e^T; I_p], (x, -x, 1, -1, 0))``.
    """
    if x.shape != (V.rows, 1):
        raise DimensionMismatch(f'point of shape {x.shape} for a cloud in dimension {V.rows}')
    p = V.cols
    ones = Matrix(1, p, (Fraction(1),) * p)
    M = vstack(V, -V, ones, -ones, identity(p))
    rhs = vstack(x, -x, vector([1, -1]), Matrix.zeros(p, 1))
    return M, rhs


def is_in_convex_hull(V: Matrix, x: Matrix) -> bool:
    """True iff ``x`` is a convex combination of the columns of ``V``."""
    return feasible(*hull_system(V, x))


def separation_hyperplane(V: Matrix, x: Matrix) -> Union[Matrix, InHull]:
    """
    Vector ``cvec`` with ``<cvec, v> > <cvec, x>`` for every column ``v``, or ``InHull()``.

    The Farkas certificate ``(u+, u-, s+, s-, w)`` of the hull system gives
    ``<u+ - u-, v> <= s- - s+ < <u+ - u-, x>``, so ``cvec = u- - u+``.
    """
    M, rhs = hull_system(V, x)
    cert = infeasibility_certificate(M, rhs)
    if cert is None:
        return InHull()
    n = V.rows
    u = cert.entries
    return vector(u[n + j] - u[j] for j in range(n))


def vertex_bases(A: Matrix, b: Matrix, progress: bool = False) -> List[Tuple[Tuple[int, ...], Matrix]]:
    """
    Feasible bases and their basic points, in lexicographic order of the bases.

    Degenerate vertices appear once per basis.
    """
    pairs = []
    for basis in tqdm(iter_bases(A), desc='bases', disable=not progress):
        point = point_of_basis(A, b, basis)
        if contains(A, b, point):
            pairs.append((basis.indices, point))
    logger.debug(f'{len(pairs)} feasible bases for a {A.rows}x{A.cols} system')
    return pairs


def enumerate_vertices(A: Matrix, b: Matrix, progress: bool = False) -> Matrix:
    """The n x q matrix whose columns are the basic points of the polyhedron."""
    return Matrix.from_columns([point for _, point in vertex_bases(A, b, progress)], A.cols)


def is_bounded_polyhedron(A: Matrix, b: Matrix) -> bool:
    """Empty, or bounded along every coordinate direction in both senses."""
    if not feasible(A, b):
        return True
    n = A.cols
    return all(bounded(A, b, unit_vector(n, j).scale(sign)) for j in range(n) for sign in (1, -1))


def sample_points(n: int, count: int, low, high, denominator: int = 4, rng: random.Random = None) -> List[Matrix]:
    """
    Reproducible random rational points with coordinates in ``[low, high]``
    on the grid of step ``1 / denominator``.
    """
    rng = rng or random.Random(0)
    low, high = Fraction(low), Fraction(high)
    lo_steps, hi_steps = math.ceil(low * denominator), math.floor(high * denominator)
    return [vector(Fraction(rng.randint(lo_steps, hi_steps), denominator) for _ in range(n)) for _ in range(count)]


def minkowski_mismatch(A: Matrix, b: Matrix, xs: Sequence[Matrix], progress: bool = False) -> Optional[Matrix]:
    """
    First sample whose membership in ``{x | A x >= b}`` differs from its
    membership in the hull of the basic points, or None.

    :raises NotBounded: If the polyhedron is unbounded.
    """
    if not is_bounded_polyhedron(A, b):
        raise NotBounded(f'the {A.rows}x{A.cols} polyhedron is unbounded')
    V = enumerate_vertices(A, b, progress)
    for x in tqdm(xs, desc='samples', disable=not progress):
        if contains(A, b, x) != is_in_convex_hull(V, x):
            logger.warning(f"Minkowski mismatch at {' '.join(format_rational(v) for v in x.entries)}")
            return x
    return None


def minkowski_check(A: Matrix, b: Matrix, xs: Sequence[Matrix], progress: bool = False) -> bool:
    """
    True iff every sample is in the polyhedron exactly when it is in the hull of its vertices.

    :raises NotBounded: If the polyhedron is unbounded.
    """
    return minkowski_mismatch(A, b, xs, progress) is None
