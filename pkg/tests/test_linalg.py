import random

from conftest import det_cofactor, random_symmetric_gram, random_unimodular

from cubiclat.linalg import (
    det_bareiss,
    frac_inverse,
    int_inverse,
    kernel_basis,
    mat_mul,
    mat_vec,
    row_lattice_basis,
    smith_normal_form,
    solve_int,
    transpose,
)


def test_det_against_cofactor_oracle():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(m) == det_cofactor(m)


def test_det_empty_and_singular():
    assert det_bareiss([]) == 1
    assert det_bareiss([[1, 2], [2, 4]]) == 0


def test_snf_factorization_and_divisibility():
    rng = random.Random(2)
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        snf = smith_normal_form(a)
        left = [list(r) for r in snf.left]
        right = [list(r) for r in snf.right]
        assert abs(det_bareiss(left)) == 1
        assert abs(det_bareiss(right)) == 1
        prod = mat_mul(mat_mul(left, a), right)
        for i in range(m):
            for j in range(n):
                assert prod[i][j] == (snf.diagonal[i] if i == j else 0)
        diag = [d for d in snf.diagonal if d]
        assert all(d > 0 for d in diag)
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))


def test_inverse_roundtrip():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 4)
        u = random_unimodular(rng, n)
        uinv = int_inverse(u)
        assert mat_mul(u, uinv) == [[int(i == j) for j in range(n)] for i in range(n)]
    inv = frac_inverse([[2, 1], [1, 1]])
    assert mat_mul(inv, [[2, 1], [1, 1]]) == [[1, 0], [0, 1]]


def test_kernel_is_saturated():
    a = [[2, 4, 6]]
    k = kernel_basis(a)
    assert len(k) == 2
    for v in k:
        assert mat_vec(a, v) == [0]
    # saturation: the kernel basis extends to a basis of Z^3
    snf = smith_normal_form(k)
    assert all(d == 1 for d in snf.diagonal)


def test_row_lattice_basis_spans_same_lattice():
    rows = [[2, 0], [0, 2], [1, 1]]
    basis = row_lattice_basis(rows)
    assert len(basis) == 2
    # index of the span of rows in Z^2 is |det| of the basis
    assert abs(det_bareiss(basis)) == 2
    for r in rows:
        sol = solve_int(transpose(basis), r)
        assert sol is not None


def test_solve_int():
    part, kern = solve_int([[2, 0], [0, 3]], [4, 9])
    assert part == [2, 3]
    assert kern == []
    assert solve_int([[2]], [3]) is None
    part, kern = solve_int([[1, 1]], [5])
    assert sum(part) == 5
    assert len(kern) == 1
