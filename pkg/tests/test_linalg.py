"""Exact null-space computation."""

import random
from fractions import Fraction

from prymlab import kernel_basis, matrix_rank


def test_full_rank_has_empty_kernel():
    identity = [[Fraction(i == j) for j in range(3)] for i in range(3)]
    assert kernel_basis(identity, 3) == []


def test_zero_map_kernel_is_everything():
    zero = [[Fraction(0)] * 3 for _ in range(2)]
    basis = kernel_basis(zero, 3)
    assert basis == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]


def test_rank_two_of_three():
    m = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]
    assert kernel_basis(m, 3) == [[1, -1, 0]]


def test_empty_matrix_kernel():
    assert kernel_basis([], 2) == [[1, 0], [0, 1]]


def test_kernel_vectors_multiply_to_zero():
    rng = random.Random(99)
    for _ in range(150):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
        for vec in kernel_basis(m, cols):
            for row in m:
                assert sum(c * v for c, v in zip(row, vec)) == 0


def test_dimension_is_cols_minus_rank():
    # Certified-rank construction: A = L @ R with L = [[I_r], [random]] and
    # R = [I_r | random] has rank exactly r.
    rng = random.Random(123)
    for _ in range(60):
        r = rng.randint(0, 4)
        rows = r + rng.randint(0, 3)
        cols = r + rng.randint(0, 3)
        L = [[Fraction(i == j) for j in range(r)] for i in range(r)]
        L += [[Fraction(rng.randint(-3, 3)) for _ in range(r)] for _ in range(rows - r)]
        R = [[Fraction(i == j) for j in range(r)] + [Fraction(rng.randint(-3, 3)) for _ in range(cols - r)] for i in range(r)]
        A = [[sum(L[i][t] * R[t][j] for t in range(r)) for j in range(cols)] for i in range(rows)]
        assert len(kernel_basis(A, cols)) == cols - r
        assert matrix_rank(A, cols) == r


def test_basis_leading_entries_are_one():
    rng = random.Random(7)
    for _ in range(40):
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(2)]
        for vec in kernel_basis(m, 4):
            lead = next(c for c in vec if c != 0)
            assert lead == 1
