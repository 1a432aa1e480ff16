import random
from itertools import product

import pytest

from acyclic.intlinalg import (
    IntMatrix,
    cokernel_structure,
    invariant_factors,
    kernel_basis,
    kernel_rank,
    rank,
    snf,
)
from oracles import invariant_factors_by_minors, leibniz_det, rank_mod


def random_matrix(rng, max_dim=5, bound=9):
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def check_decomposition(M):
    s = snf(M)
    assert s.U @ M @ s.V == s.D
    assert abs(s.U.det()) == 1
    assert abs(s.V.det()) == 1
    assert s.V @ s.V_inv == IntMatrix.identity(M.cols)
    for i in range(M.rows):
        for j in range(M.cols):
            expected = s.diagonal[i] if i == j and i < s.rank else 0
            assert s.D[i, j] == expected
    assert all(b % a == 0 for a, b in zip(s.diagonal, s.diagonal[1:]))
    return s


def test_frozen_examples():
    assert invariant_factors(IntMatrix.from_rows([[5, -3], [-2, 1]])) == (1, 1)
    assert invariant_factors(IntMatrix.from_rows([[2, 4], [6, 8]])) == (2, 4)
    M = IntMatrix.from_rows([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
    assert invariant_factors(M) == (1, 10, 30)


def test_gcd_of_minors_oracle_on_frozen_example():
    rows = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    assert invariant_factors_by_minors(rows) == [1, 10, 30]
    assert leibniz_det(rows) == 300


def test_random_matrices_match_minor_oracle():
    rng = random.Random(7)
    for _ in range(150):
        rows = random_matrix(rng, max_dim=4, bound=6)
        M = IntMatrix.from_rows(rows)
        s = check_decomposition(M)
        assert list(s.diagonal) == invariant_factors_by_minors(rows)
        assert s.rank == rank_mod(rows)


def test_sparse_random_matrices():
    rng = random.Random(11)
    for _ in range(500):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.choice([0, 0, 0, 1, -1, 2, -3]) for _ in range(c)] for _ in range(r)]
        check_decomposition(IntMatrix.from_rows(rows))


def test_snf_is_idempotent():
    rng = random.Random(3)
    for _ in range(50):
        M = IntMatrix.from_rows(random_matrix(rng))
        D = snf(M).D
        assert snf(D).D == D


def test_transpose_invariance():
    rng = random.Random(5)
    for _ in range(100):
        M = IntMatrix.from_rows(random_matrix(rng))
        assert invariant_factors(M) == invariant_factors(M.T)


def test_zero_and_empty_shapes():
    Z = IntMatrix.zeros(3, 2)
    s = check_decomposition(Z)
    assert s.diagonal == ()
    assert rank(Z) == 0
    assert kernel_rank(Z) == 2
    E = IntMatrix.zeros(0, 3)
    assert rank(E) == 0
    assert kernel_rank(E) == 3
    assert cokernel_structure(IntMatrix.zeros(2, 0)) == (2, [])


def test_kernel_basis_spans_kernel():
    rng = random.Random(9)
    for _ in range(60):
        rows = random_matrix(rng, bound=3)
        M = IntMatrix.from_rows(rows)
        K = kernel_basis(M)
        assert K.cols == M.cols - rank_mod(rows)
        assert (M @ K).is_zero()


def cokernel_order_by_enumeration(rows, box=12):
    """|Z^n / col span| for a full-rank square matrix, by counting lattice cosets.

    Counts the points of ``[0, d)^n`` reduced modulo the column lattice, with
    ``d = |det|``; every coset has a representative there.
    """
    n = len(rows)
    d = abs(leibniz_det(rows))
    if d == 0 or d > box:
        return None
    # x is in the lattice iff M^-1 x is integral iff adj(M) x = 0 mod d
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * leibniz_det(minor) if n > 1 else 1
    classes = set()
    for x in product(range(d), repeat=n):
        classes.add(tuple(sum(adj[i][k] * x[k] for k in range(n)) % d for i in range(n)))
    return len(classes)


def test_cokernel_order_matches_enumeration():
    rng = random.Random(13)
    checked = 0
    while checked < 40:
        n = rng.randint(1, 3)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        order = cokernel_order_by_enumeration(rows)
        if order is None:
            continue
        free, torsion = cokernel_structure(IntMatrix.from_rows(rows))
        assert free == 0
        total = 1
        for t in torsion:
            total *= t
        assert total == order
        checked += 1


def test_cokernel_uses_column_span():
    # Z^2 / <(2, 0)>  is  Z + Z/2
    assert cokernel_structure(IntMatrix.from_rows([[2], [0]])) == (1, [2])


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises((TypeError, ValueError)):
        IntMatrix(2, 2, (1, 2, 3))


def test_det_matches_leibniz():
    rng = random.Random(17)
    for _ in range(50):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert IntMatrix.from_rows(rows).det() == leibniz_det(rows)


def test_empty_matrix_conventions():
    s = snf(IntMatrix.zeros(0, 0))
    assert s.U.shape == (0, 0) and s.V.shape == (0, 0) and s.diagonal == ()
    s = snf(IntMatrix.zeros(0, 3))
    assert s.U.shape == (0, 0)
    assert s.V == IntMatrix.identity(3)
