import random

import pytest

from cleavedpa.linalg import (
    RingMatrix,
    determinant,
    evaluated_rank,
    fraction_free_rref,
    kernel_basis,
    kernel_membership,
    rank,
)
from cleavedpa.ring import DELTA, ONE, Q, ZERO, HalfLaurent, qpow


def random_entry(rng):
    return HalfLaurent({rng.randint(-3, 3): rng.randint(-2, 2) for _ in range(rng.randint(0, 2))})


def random_matrix(rng, n, m):
    return RingMatrix([[random_entry(rng) for _ in range(m)] for _ in range(n)])


def test_pivots_are_equal():
    rng = random.Random(51)
    for _ in range(20):
        A, pivots, d = fraction_free_rref(random_matrix(rng, 4, 5))
        for i, c in enumerate(pivots):
            assert A[i][c] == d
            assert all(not A[r][c] for r in range(len(A)) if r != i)


def test_kernel_vectors_are_in_kernel():
    rng = random.Random(52)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        basis = kernel_basis(M)
        assert len(basis) == M.shape[1] - rank(M)
        assert all(kernel_membership(M, v) for v in basis)


def test_symbolic_and_evaluated_rank_agree():
    rng = random.Random(53)
    for _ in range(30):
        M = random_matrix(rng, 4, 4)
        assert rank(M) == evaluated_rank(M)


def test_rank_of_singular_ring_matrix():
    # second row is delta times the first
    M = RingMatrix([[Q, ONE], [Q * DELTA, DELTA]])
    assert rank(M) == 1
    (v,) = kernel_basis(M)
    assert kernel_membership(M, v)


def test_determinant():
    assert determinant(RingMatrix([[Q, ONE], [ONE, qpow(-2)]])) == ZERO
    assert determinant(RingMatrix([[ZERO, ONE], [ONE, ZERO]])) == -ONE
    assert determinant(RingMatrix.identity(3).scale(Q)) == qpow(6)
    rng = random.Random(54)
    for _ in range(10):
        A, B = random_matrix(rng, 3, 3), random_matrix(rng, 3, 3)
        assert determinant(A @ B) == determinant(A) * determinant(B)


def test_matrix_helpers():
    M = RingMatrix([[1, 2], [3, 4]], ["a", "b"], ["x", "y"])
    assert M.transpose().rows == [[HalfLaurent(1), HalfLaurent(3)], [HalfLaurent(2), HalfLaurent(4)]]
    assert M.apply([1, 0]) == [HalfLaurent(1), HalfLaurent(3)]
    assert M.stack(M).shape == (4, 2)
    assert (M + M.scale(-1)).is_zero()
    with pytest.raises(ValueError):
        RingMatrix([[1], [1, 2]])
    with pytest.raises(ValueError):
        M @ RingMatrix([[1, 2, 3]])
