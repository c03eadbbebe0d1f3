"""Verdicts of the simplex method, each carrying its certificate."""

from dataclasses import dataclass
from typing import Union

from .ratlin import Matrix


@dataclass(frozen=True)
class Infeasible:
    """``d >= 0``, ``A^T d = 0`` and ``<b, d> > 0``: the polyhedron is empty."""
    d: Matrix

    status = 'infeasible'


@dataclass(frozen=True)
class Unbounded:
    """``x`` is feasible, ``A d >= 0`` and ``<c, d> < 0``."""
    x: Matrix
    d: Matrix

    status = 'unbounded'


@dataclass(frozen=True)
class Optimal:
    """``x`` is feasible, ``u`` is dual feasible and ``<c, x> = <b, u>``."""
    x: Matrix
    u: Matrix

    status = 'optimal'


SimplexResult = Union[Infeasible, Unbounded, Optimal]
