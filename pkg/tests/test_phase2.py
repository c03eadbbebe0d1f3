import random
from math import comb

import pytest

from certified_simplex.src.basis import (PreBasis, direction, make_basis, make_feasible_basis, point_of_basis,
                                         reduced_cost, unbounded_cert_on_basis)
from certified_simplex.src.errors import IterationBudgetExceeded
from certified_simplex.src.lexrule import perturbed_objective
from certified_simplex.src.phase2 import OptimalBasis, UnboundedAt, feasible_to_lex_feasible, phase2
from certified_simplex.src.polyhedron import contains, is_feasible_dir
from certified_simplex.src.ratlin import Matrix, dot, independent_rows, rank, vector


def feasible_basis(lp, rows):
    return make_feasible_basis(lp.A, lp.b, make_basis(lp.A, PreBasis(rows)))


def assert_lex_monotone(A, b, c, bas0, result):
    """No basis is visited twice and the perturbed objective strictly decreases."""
    path = result.path
    assert len(set(path)) == len(path)
    assert result.pivots <= comb(A.rows, A.cols)
    bp = feasible_to_lex_feasible(A, b, bas0)
    heights = [perturbed_objective(c, bp, make_basis(A, PreBasis(rows))) for rows in path]
    assert all(later < earlier for earlier, later in zip(heights, heights[1:]))


def test_fig1_from_worst_vertex(fig1):
    bas0 = feasible_basis(fig1, (3, 4))
    result = phase2(fig1.A, fig1.b, fig1.c, bas0)
    assert isinstance(result, OptimalBasis)
    assert result.path == ((3, 4), (0, 4), (0, 2))
    assert result.pivots == 2
    assert point_of_basis(fig1.A, fig1.b, result.basis) == vector([1, 3])
    assert_lex_monotone(fig1.A, fig1.b, fig1.c, bas0, result)


def test_fig1_starting_at_optimum(fig1):
    result = phase2(fig1.A, fig1.b, fig1.c, feasible_basis(fig1, (0, 2)))
    assert isinstance(result, OptimalBasis)
    assert result.pivots == 0


def test_degenerate_pivot(degenerate):
    bas0 = feasible_basis(degenerate, (0, 2))
    result = phase2(degenerate.A, degenerate.b, degenerate.c, bas0)
    assert isinstance(result, OptimalBasis)
    assert result.path == ((0, 2), (1, 2))
    assert_lex_monotone(degenerate.A, degenerate.b, degenerate.c, bas0, result)


def test_unbounded_at():
    A = Matrix.from_rows([[1, 0], [0, 1]])
    b = vector([0, 0])
    c = vector([-1, 0])
    result = phase2(A, b, c, make_feasible_basis(A, b, make_basis(A, PreBasis((0, 1)))))
    assert isinstance(result, UnboundedAt)
    assert result.position == 0
    assert reduced_cost(A, c, result.basis)[0, 0] < 0
    assert is_feasible_dir(A, direction(A, result.basis, result.position))


def test_cycling_instance_terminates(cycling):
    A, b, c = cycling.A, cycling.b, cycling.c
    bas0 = feasible_basis(cycling, (3, 4, 5, 6))
    result = phase2(A, b, c, bas0)
    assert isinstance(result, OptimalBasis)
    x = point_of_basis(A, b, result.basis)
    assert x == vector([1, 0, 1, 0])
    assert dot(c, x) == -1
    assert_lex_monotone(A, b, c, bas0, result)


def duplicated_row_instance(rng: random.Random):
    """Random rows through the origin with positive multiples of some rows appended."""
    n = rng.randint(2, 3)
    while True:
        base = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(rng.randint(n, n + 2))]
        if rank(Matrix.from_rows(base)) == n:
            break
    rows = base + [[rng.randint(1, 3) * a for a in rng.choice(base)] for _ in range(rng.randint(1, 3))]
    rng.shuffle(rows)
    A = Matrix.from_rows(rows)
    b = vector([0] * A.rows)
    c = vector([rng.randint(-5, 5) for _ in range(n)])
    return A, b, c


@pytest.mark.parametrize('seed', range(40))
def test_duplicated_rows_never_cycle(seed):
    A, b, c = duplicated_row_instance(random.Random(seed))
    bas0 = make_feasible_basis(A, b, make_basis(A, PreBasis(independent_rows(A))))
    result = phase2(A, b, c, bas0)
    assert_lex_monotone(A, b, c, bas0, result)
    if isinstance(result, OptimalBasis):
        assert reduced_cost(A, c, result.basis).is_nonneg()
    else:
        assert is_feasible_dir(A, direction(A, result.basis, result.position))


def test_budget_is_enforced(fig1, monkeypatch):
    monkeypatch.setattr('certified_simplex.src.phase2.comb', lambda m, n: 1)
    with pytest.raises(IterationBudgetExceeded):
        phase2(fig1.A, fig1.b, fig1.c, feasible_basis(fig1, (3, 4)))


def phase2_results(count=40):
    for seed in range(count):
        A, b, c = duplicated_row_instance(random.Random(seed))
        bas0 = make_feasible_basis(A, b, make_basis(A, PreBasis(independent_rows(A))))
        yield A, b, c, phase2(A, b, c, bas0)
    A = Matrix.from_rows([[1, 0], [0, 1]])
    b = vector([0, 0])
    c = vector([-1, 0])
    yield A, b, c, phase2(A, b, c, make_feasible_basis(A, b, make_basis(A, PreBasis((0, 1)))))


@pytest.mark.parametrize('bound', [0, -10 ** 6])
def test_unbounded_result_yields_points_below_any_bound(bound):
    found = 0
    for A, b, c, result in phase2_results():
        if not isinstance(result, UnboundedAt):
            continue
        y = unbounded_cert_on_basis(A, b, c, result.basis, result.position, bound)
        assert contains(A, b, y)
        assert dot(c, y) < bound
        found += 1
    assert found > 0
