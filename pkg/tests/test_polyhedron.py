import random
from fractions import Fraction

import pytest

from certified_simplex.src.errors import DimensionMismatch
from certified_simplex.src.polyhedron import (LinearProgram, contains, dual_contains, dual_system, is_dual_feasible_dir,
                                              is_feasible_dir, ray_point)
from certified_simplex.src.ratlin import Matrix, dot, vector, vstack


def test_linear_program_checks_shapes():
    with pytest.raises(DimensionMismatch):
        LinearProgram(Matrix.from_rows([[1, 2]]), vector([1, 2]), vector([1, 1]))


def test_contains_fig1(fig1):
    assert contains(fig1.A, fig1.b, vector([1, 3]))
    assert contains(fig1.A, fig1.b, vector([4, 3]))
    assert not contains(fig1.A, fig1.b, vector([0, 0]))


def test_contains_checks_dimensions(fig1):
    with pytest.raises(DimensionMismatch):
        contains(fig1.A, fig1.b, vector([1, 2, 3]))


def test_dual_contains_fig1(fig1):
    u = vector(['7/5', 0, '2/5', 0, 0])
    assert dual_contains(fig1.A, fig1.c, u)
    assert dot(fig1.b, u) == 6
    assert not dual_contains(fig1.A, fig1.c, vector(['7/5', 0, '2/5', 0, 1]))
    assert not dual_contains(fig1.A, fig1.c, vector([3, 0, 0, 0, -2]))


def test_feasible_directions():
    A = Matrix.from_rows([[1, 0], [0, 1]])
    assert is_feasible_dir(A, vector([1, 2]))
    assert not is_feasible_dir(A, vector([-1, 0]))


def test_dual_feasible_directions(e2):
    assert is_dual_feasible_dir(e2.A, vector([1, 1]))
    assert not is_dual_feasible_dir(e2.A, vector([1, 0]))
    assert not is_dual_feasible_dir(e2.A, vector([-1, -1]))


def test_ray_point_goes_below_bound():
    c = vector([-1])
    x = vector([0])
    d = vector([1])
    y = ray_point(c, x, d, -10)
    assert dot(c, y) < -10
    assert dot(c, ray_point(c, x, d, 5)) < 5


def test_ray_point_needs_improving_direction():
    with pytest.raises(ValueError):
        ray_point(vector([1]), vector([0]), vector([1]), 0)


def test_dual_system_matches_dual_contains(fig1):
    D, r = dual_system(fig1.A, fig1.c)
    assert D.shape == (2 + 2 + 5, 5)
    for u in (vector(['7/5', 0, '2/5', 0, 0]), vector([1, 0, 0, 0, 0]), vector([3, 0, 0, 0, -2])):
        assert contains(D, r, u) == dual_contains(fig1.A, fig1.c, u)


def random_matrix(rng, rows, cols):
    return Matrix.from_rows([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_vector(rng, n, low=-4, high=4):
    return vector(rng.randint(low, high) for _ in range(n))


@pytest.mark.parametrize('seed', range(30))
def test_contains_is_monotone_in_b(seed):
    """Lowering the right-hand side never removes a point."""
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 3)
    A, x = random_matrix(rng, m, n), random_vector(rng, n)
    b = A @ x - random_vector(rng, m, 0, 2)
    assert contains(A, b, x)
    lower = b - random_vector(rng, m, 0, 3)
    assert contains(A, lower, x)
    for _ in range(20):
        y = random_vector(rng, n)
        if contains(A, b, y):
            assert contains(A, lower, y)


@pytest.mark.parametrize('seed', range(30))
def test_feasible_direction_keeps_points_inside(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 3)
    A, x = random_matrix(rng, m, n), random_vector(rng, n)
    b = A @ x - random_vector(rng, m, 0, 2)
    for _ in range(20):
        d = random_vector(rng, n, -2, 2)
        if is_feasible_dir(A, d):
            for step in (0, Fraction(1, 2), 3, 100):
                assert contains(A, b, x + d.scale(step))


@pytest.mark.parametrize('seed', range(30))
def test_dual_feasible_directions_are_closed_under_addition(seed):
    rng = random.Random(seed)
    B = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
    A = vstack(B, -B, B.scale(2))
    k = B.rows
    dirs = []
    for _ in range(4):
        y, z = random_vector(rng, k, 0, 3), random_vector(rng, k, 0, 3)
        # B^T y - B^T (y + 2z) + 2 B^T z = 0
        dirs.append(vstack(y, y + z.scale(2), z))
    for d in dirs:
        assert is_dual_feasible_dir(A, d)
    for d1 in dirs:
        for d2 in dirs:
            assert is_dual_feasible_dir(A, d1 + d2)
