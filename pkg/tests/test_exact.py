from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rigidlab.exact import (RatMatrix, bareiss_rank, kernel_basis, left_kernel, make_rng,
                            random_matrix, rank, rank_mod_p, rref_rows, solve, vec_mat)


def small_matrices(max_rows=6, max_cols=6, bound=4):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda rows: RatMatrix(r, c, [x for row in rows for x in row]))))


# ---------------------------------------------------------------- examples

def test_rank_examples():
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(RatMatrix.zeros(2, 5)) == 0
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(3)).rows == 0
    assert kernel_basis(RatMatrix.zeros(2, 3)).rows == 2
    K = kernel_basis(RatMatrix.from_rows([[1], [1]]))
    assert K.rows == 1
    assert K[0, 0] == -K[0, 1] != 0


def test_solve_examples():
    b = [Fraction(3), Fraction(-1, 2)]
    assert solve(RatMatrix.identity(2), b) == b
    assert solve(RatMatrix.zeros(2, 2), [1, 0]) is None
    assert solve(RatMatrix.from_rows([[2]]), [1]) == [Fraction(1, 2)]


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(RatMatrix.identity(2), [1, 2, 3])


def test_random_matrix_examples():
    a = random_matrix(2, 2, 1, make_rng(0))
    b = random_matrix(2, 2, 1, make_rng(0))
    assert a == b
    assert random_matrix(0, 3, 5, make_rng(1)).shape == (0, 3)
    with pytest.raises(ValueError):
        random_matrix(2, 2, 0, make_rng(0))


def test_random_matrix_usually_invertible():
    invertible = sum(rank(random_matrix(3, 3, 10, make_rng(s))) == 3 for s in range(1000))
    assert invertible >= 990


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [3]])


def test_large_matrix_uses_flint_and_agrees():
    rng = make_rng("large")
    M = random_matrix(60, 60, 3, rng)
    rows = M.to_lists()
    # make the last row dependent on the first two
    rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1])]
    M = RatMatrix.from_rows(rows)
    assert rank(M, backend="flint") == rank(M, backend="python") == 59
    assert rank(M) == 59


def test_modular_rank_is_lower_bound():
    M = [[2, 0], [0, 3]]
    assert rank_mod_p(M, 2, p=2) == 1
    assert bareiss_rank(M, 2) == 2


# ---------------------------------------------------------------- properties

@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_rank_nullity(M):
    assert rank(M) + kernel_basis(M).rows == M.rows


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_kernel_rows_annihilate(M):
    for v in kernel_basis(M).to_lists():
        assert all(x == 0 for x in vec_mat(v, M))


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_left_kernel_free_coordinates_form_identity(M):
    basis, free = left_kernel(M)
    for i, v in enumerate(basis):
        assert [v[j] for j in free] == [int(i == k) for k in range(len(free))]


@settings(max_examples=150, deadline=None)
@given(small_matrices(max_cols=5), st.data())
def test_solve_soundness(A, data):
    b = data.draw(st.lists(st.integers(-5, 5), min_size=A.cols, max_size=A.cols))
    x = solve(A, b)
    if x is not None:
        assert vec_mat(x, A) == [Fraction(v) for v in b]
    else:
        extended = RatMatrix.from_rows(A.to_lists() + [b], A.cols)
        assert rank(extended) == rank(A) + 1


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_rows=8, max_cols=8, bound=20))
def test_backends_agree(M):
    assert rank(M, backend="python") == rank(M, backend="flint")
    rows = M.to_lists()
    if rows and M.cols:
        assert rref_rows(rows, M.cols, backend="python") == rref_rows(rows, M.cols, backend="flint")


@settings(max_examples=50, deadline=None)
@given(small_matrices(), small_matrices())
def test_matrix_product_associates_with_vectors(A, B):
    if A.cols != B.rows or A.rows == 0:
        return
    v = [1] * A.rows
    assert vec_mat(vec_mat(v, A), B) == vec_mat(v, A @ B)
