import random
from fractions import Fraction

import pytest

from certified_simplex.src.basis import (PreBasis, direction, iter_bases, make_basis, make_feasible_basis,
                                         point_of_basis)
from certified_simplex.src.errors import NotFeasible
from certified_simplex.src.lexrule import (LexFeasibleBasis, LexOrder, PerturbedRHS, entering_row, is_lex_feasible,
                                           lex_compare, lex_gap, lex_min_seq, lex_pivot, make_lex_feasible_basis,
                                           perturbed_objective, point_of_basis_pert)
from certified_simplex.src.phase2 import feasible_to_lex_feasible
from certified_simplex.src.polyhedron import contains, is_feasible_dir
from certified_simplex.src.ratlin import Matrix, vector
from conftest import random_lp


def test_lex_compare():
    assert lex_compare((1, 2), (1, 3)) == LexOrder.LT
    assert lex_compare((1, 2), (1, 2)) == LexOrder.EQ
    assert lex_compare((2, -5), (1, 9)) == LexOrder.GT
    assert lex_compare((), ()) == LexOrder.EQ


def test_lex_min_seq():
    assert lex_min_seq([(1, 2), (0, 9), (0, 3)]) == (0, 3)
    with pytest.raises(ValueError):
        lex_min_seq([])


def test_perturbed_rhs_rows():
    bp = PerturbedRHS(vector([4, 7]), (1, 0))
    assert bp.row(0) == (4, 0, -1)
    assert bp.row(1) == (7, -1, 0)
    with pytest.raises(ValueError):
        PerturbedRHS(vector([4, 7]), (0, 0))


def test_point_of_basis_pert_first_column_is_basic_point(fig1):
    bp = PerturbedRHS.identity(fig1.b)
    X = point_of_basis_pert(fig1.A, bp, make_basis(fig1.A, PreBasis((0, 2))))
    assert X.shape == (2, 6)
    assert X.column(0) == (1, 3)
    # only the columns of the basis rows carry perturbation terms
    assert X.column(2) == X.column(4) == X.column(5) == (0, 0)


def test_perturbed_objective_matches_point(fig1):
    bp = PerturbedRHS(fig1.b, (3, 0, 4, 1, 2))
    I = make_basis(fig1.A, PreBasis((0, 2)))
    X = point_of_basis_pert(fig1.A, bp, I)
    expected = tuple(sum(c * x for c, x in zip(fig1.c.entries, X.column(j))) for j in range(X.cols))
    assert perturbed_objective(fig1.c, bp, I) == expected


def test_feasible_to_lex_feasible_fig1(fig1):
    bas0 = make_feasible_basis(fig1.A, fig1.b, make_basis(fig1.A, PreBasis((0, 2))))
    bp = feasible_to_lex_feasible(fig1.A, fig1.b, bas0)
    assert bp.perm == (3, 0, 4, 1, 2)
    assert is_lex_feasible(fig1.A, bp, bas0)


def test_feasible_to_lex_feasible_degenerate(degenerate):
    for rows in [(0, 1), (0, 2), (1, 2)]:
        bas0 = make_feasible_basis(degenerate.A, degenerate.b, make_basis(degenerate.A, PreBasis(rows)))
        bp = feasible_to_lex_feasible(degenerate.A, degenerate.b, bas0)
        assert is_lex_feasible(degenerate.A, bp, bas0)


def test_degenerate_bases_are_not_all_lex_feasible(degenerate):
    # all three bases meet at 0 but the perturbation separates them
    bp = PerturbedRHS.identity(degenerate.b)
    lex = [rows for rows in [(0, 1), (0, 2), (1, 2)]
           if is_lex_feasible(degenerate.A, bp, make_basis(degenerate.A, PreBasis(rows)))]
    assert lex == [(0, 2), (1, 2)]
    with pytest.raises(NotFeasible):
        make_lex_feasible_basis(degenerate.A, bp, make_basis(degenerate.A, PreBasis((0, 1))))


def test_lex_gap_and_entering_row(degenerate):
    A, b, c = degenerate.A, degenerate.b, degenerate.c
    I = make_basis(A, PreBasis((0, 2)))
    bp = feasible_to_lex_feasible(A, b, make_feasible_basis(A, b, I))
    d = vector([1, -1])
    assert entering_row(A, bp, I, d) == 1
    assert lex_gap(A, bp, I, d, 1)[0] == 0
    with pytest.raises(ZeroDivisionError):
        lex_gap(A, bp, I, d, 2)


def test_lex_pivot_decreases_perturbed_objective(degenerate):
    A, b, c = degenerate.A, degenerate.b, degenerate.c
    I = make_basis(A, PreBasis((0, 2)))
    bp = feasible_to_lex_feasible(A, b, make_feasible_basis(A, b, I))
    J = lex_pivot(A, bp, c, LexFeasibleBasis(I), 0)
    assert J.indices == (1, 2)
    assert is_lex_feasible(A, bp, J)
    assert perturbed_objective(c, bp, J) < perturbed_objective(c, bp, I)


def test_lex_pivot_rejects_nonnegative_reduced_cost(fig1):
    I = make_basis(fig1.A, PreBasis((0, 2)))
    bp = feasible_to_lex_feasible(fig1.A, fig1.b, make_feasible_basis(fig1.A, fig1.b, I))
    with pytest.raises(AssertionError):
        lex_pivot(fig1.A, bp, fig1.c, LexFeasibleBasis(I), 0)


def test_fig1_pivot_from_worst_vertex(fig1):
    # (6, 1) has negative reduced cost at the position of row 3
    A, b, c = fig1.A, fig1.b, fig1.c
    I = make_basis(A, PreBasis((3, 4)))
    bp = feasible_to_lex_feasible(A, b, make_feasible_basis(A, b, I))
    J = lex_pivot(A, bp, c, make_lex_feasible_basis(A, bp, I), 0)
    assert J.indices == (0, 4)
    assert perturbed_objective(c, bp, J)[0] == Fraction(10)
    assert perturbed_objective(c, bp, J) < perturbed_objective(c, bp, I)


def test_matrix_of_perturbed_rhs():
    bp = PerturbedRHS.identity(vector([1, 2]))
    assert bp.matrix() == Matrix.from_rows([[1, -1, 0], [2, 0, -1]])


def random_lex_value(rng, length=3):
    return tuple(Fraction(rng.randint(-2, 2)) for _ in range(length))


def test_lex_compare_is_a_total_order():
    rng = random.Random(6)
    for _ in range(500):
        x, y, z = (random_lex_value(rng) for _ in range(3))
        assert lex_compare(x, y) == -lex_compare(y, x)
        assert (lex_compare(x, y) == LexOrder.EQ) == (x == y)
        if lex_compare(x, y) != LexOrder.GT and lex_compare(y, z) != LexOrder.GT:
            assert lex_compare(x, z) != LexOrder.GT
        assert lex_compare(x, y) in (LexOrder.LT, LexOrder.EQ, LexOrder.GT)


def random_perm(rng, m):
    perm = list(range(m))
    rng.shuffle(perm)
    return tuple(perm)


@pytest.mark.parametrize('name', ['fig1', 'degenerate', 'cycling'])
def test_perturbation_columns_follow_the_basis(request, name):
    """Column 1 + s(j) of the perturbed point is nonzero exactly for the basis rows j."""
    lp = request.getfixturevalue(name)
    rng = random.Random(len(name))
    for I in iter_bases(lp.A):
        bp = PerturbedRHS(lp.b, random_perm(rng, lp.m))
        X = point_of_basis_pert(lp.A, bp, I)
        for j in range(lp.m):
            nonzero = any(X.column(1 + bp.perm[j]))
            assert nonzero == (j in I.indices)


def lex_feasible_starts(count=60, seed=13):
    """Feasible bases of random programs with the perturbation that makes them lex-feasible."""
    rng = random.Random(seed)
    for _ in range(count):
        lp = random_lp(rng, max_n=3, max_m=5)
        for I in iter_bases(lp.A):
            if contains(lp.A, lp.b, point_of_basis(lp.A, lp.b, I)):
                bas0 = make_feasible_basis(lp.A, lp.b, I)
                yield lp, I, feasible_to_lex_feasible(lp.A, lp.b, bas0)


def test_entering_row_attains_the_minimal_gap():
    checked = 0
    for lp, I, bp in lex_feasible_starts():
        for k in range(len(I)):
            d = direction(lp.A, I, k)
            if is_feasible_dir(lp.A, d):
                continue
            Ad = lp.A @ d
            j = entering_row(lp.A, bp, I, d)
            assert Ad[j, 0] < 0
            candidates = [i for i in range(lp.m) if Ad[i, 0] < 0]
            assert lex_gap(lp.A, bp, I, d, j) == lex_min_seq([lex_gap(lp.A, bp, I, d, i) for i in candidates])
            checked += 1
    assert checked > 0
