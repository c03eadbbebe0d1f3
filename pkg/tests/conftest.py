import random
from typing import List

import pytest

from certified_simplex.src.polyhedron import LinearProgram
from certified_simplex.src.ratlin import Matrix, vector
from certified_simplex.src.simplex import simplex

CORPUS_SIZE = 500
CORPUS_SEED = 20240917


def make_lp(rows, b, c) -> LinearProgram:
    n = len(c)
    return LinearProgram(Matrix.from_rows(rows, cols=n), vector(b), vector(c))


def random_lp(rng: random.Random, max_n: int = 3, max_m: int = 6, low: int = -5, high: int = 5) -> LinearProgram:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    rows = [[rng.randint(low, high) for _ in range(n)] for _ in range(m)]
    b = [rng.randint(low, high) for _ in range(m)]
    c = [rng.randint(low, high) for _ in range(n)]
    return make_lp(rows, b, c)


def random_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> List[LinearProgram]:
    rng = random.Random(seed)
    return [random_lp(rng) for _ in range(size)]


@pytest.fixture
def fig1() -> LinearProgram:
    """
    minimize 3x + y subject to
        x + y >= 4, -x - 3y >= -23, 4x - y >= 1, -2x + y >= -11, y >= 1
    """
    return make_lp(
        [[1, 1], [-1, -3], [4, -1], [-2, 1], [0, 1]],
        [4, -23, 1, -11, 1],
        [3, 1],
    )


@pytest.fixture
def e2() -> LinearProgram:
    """x >= 1 and -x >= 0: empty."""
    return make_lp([[1], [-1]], [1, 0], [1])


@pytest.fixture
def degenerate() -> LinearProgram:
    """Three bases, all with basic point 0."""
    return make_lp([[1, 0], [0, 1], [1, 1]], [0, 0, 0], [1, 2])


@pytest.fixture
def cycling() -> LinearProgram:
    """
    A degenerate program on which the textbook largest-coefficient rule cycles:
    minimize -10x1 + 57x2 + 9x3 + 24x4 over
        1/2 x1 - 11/2 x2 - 5/2 x3 + 9 x4 <= 0,
        1/2 x1 - 3/2 x2 - 1/2 x3 + x4 <= 0,
        x1 <= 1, x >= 0.
    The optimum is -1 at (1, 0, 1, 0).
    """
    return make_lp(
        [
            ['-1/2', '11/2', '5/2', -9],
            ['-1/2', '3/2', '1/2', -1],
            [-1, 0, 0, 0],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ],
        [0, 0, -1, 0, 0, 0, 0],
        [-10, 57, 9, 24],
    )


@pytest.fixture(scope='session')
def corpus() -> List[LinearProgram]:
    return random_corpus()


@pytest.fixture(scope='session')
def corpus_results(corpus):
    """Simplex verdicts of the corpus, computed once."""
    return [simplex(lp.A, lp.b, lp.c) for lp in corpus]
