from fractions import Fraction

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from fano12.field import PHI, QExt
from fano12.linalg import det, det_cofactor, kernel_basis, mat_vec, rank, rref, solve_linear
from oracles import sympy_matrix


def matrices(max_rows=5, max_cols=6, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


square = st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n))


def test_rref_small():
    r, rk, piv = rref([[2, 4], [1, 2]])
    assert rk == 1 and piv == [0] and r[0] == [1, 2]


def test_qext_kernel():
    m = [[PHI, QExt(1)], [PHI * PHI, PHI]]
    ker = kernel_basis(m)
    assert len(ker) == 1
    assert all(x == 0 for x in mat_vec(m, ker[0], QExt(0)))


def test_solve_inconsistent():
    assert solve_linear([[1, 1], [1, 1]], [1, 2]) is None
    assert solve_linear([[1, 1], [1, -1]], [2, 0]) == [1, 1]


@given(matrices())
def test_rank_nullity(m):
    ncols = len(m[0])
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == ncols
    for v in ker:
        assert all(x == 0 for x in mat_vec(m, v, Fraction(0)))
    assert rank(m) == sympy_matrix(m).rank()


@given(matrices(max_rows=4, max_cols=4, lo=-2, hi=2))
def test_rank_nullity_over_extension(m):
    mq = [[QExt(x, (x * 3 + j) % 3 - 1) for j, x in enumerate(row)] for row in m]
    ker = kernel_basis(mq)
    assert rank(mq) + len(ker) == len(m[0])
    for v in ker:
        assert all(x == 0 for x in mat_vec(mq, v, QExt(0)))


@given(square)
def test_determinants_agree(m):
    d = det(m, Fraction(1))
    assert d == det_cofactor(m, 0)
    assert d == sympy_matrix(m).det()


@given(matrices(), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solution_solves(m, b):
    b = b[: len(m)]
    x = solve_linear(m, b)
    consistent = sympy_matrix(m).rank() == sp.Matrix(m).row_join(sp.Matrix(b)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert mat_vec(m, x, Fraction(0)) == [Fraction(v) for v in b]
