from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhopf.exactmath import (Matrix, PrimeField, QQ, kernel_basis, rank,
                                solve, subspace_contains, subspace_equal)

F5 = PrimeField(5)


def q(n, d=1):
    return Fraction(n, d)


def qmat(rows):
    return Matrix.from_rows(QQ, [[q(x) for x in row] for row in rows])


def test_identity_has_trivial_kernel():
    m = qmat([[1, 0], [0, 1]])
    assert kernel_basis(m) == []


def test_rank_one_row_kernel():
    m = qmat([[1, 1]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    # spans (1, -1)
    assert subspace_equal(QQ, basis, [[q(1), q(-1)]])


def test_kernel_of_known_rank_product():
    # rank exactly 3: full-column-rank 4x3 times full-row-rank 3x6
    a = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
    b = [[1, 0, 0, 1, 2, 0], [0, 1, 0, 1, 0, 3], [0, 0, 1, 0, 1, 1]]
    prod = [[q(sum(a[i][k] * b[k][j] for k in range(3))) for j in range(6)]
            for i in range(4)]
    m = Matrix.from_rows(QQ, prod)
    assert rank(m) == 3
    basis = kernel_basis(m)
    assert len(basis) == 3
    for v in basis:
        assert all(x == 0 for x in m.mat_vec(v))


def test_zero_row_matrix_kernel_is_everything():
    m = Matrix(QQ, 0, 3, [])
    basis = kernel_basis(m)
    assert len(basis) == 3
    assert subspace_equal(QQ, basis, [[q(1), q(0), q(0)],
                                      [q(0), q(1), q(0)],
                                      [q(0), q(0), q(1)]])


def test_subspace_equal_scaling():
    assert subspace_equal(QQ, [[q(1), q(0)]], [[q(2), q(0)]])
    assert not subspace_equal(QQ, [[q(1), q(0)]], [[q(0), q(1)]])
    assert subspace_equal(QQ, [[q(1), q(1)], [q(1), q(0)]],
                          [[q(0), q(1)], [q(1), q(0)]])


def test_subspace_dimension_mismatch():
    with pytest.raises(ValueError):
        subspace_equal(QQ, [[q(1), q(0)]], [[q(1), q(0), q(0)]])
    with pytest.raises(ValueError):
        subspace_contains(QQ, [[q(1), q(0), q(0)]], [q(1), q(0)])


def test_subspace_contains():
    assert subspace_contains(QQ, [[q(1), q(0)]], [q(3), q(0)])
    assert not subspace_contains(QQ, [[q(1), q(0)]], [q(0), q(1)])
    # GF(5): 3 * (1, 2) = (3, 6) = (3, 1)
    assert subspace_contains(F5, [[1, 2]], [3, 1])


def test_gf5_arithmetic():
    assert F5.inv(2) == 3
    assert F5.parse("7") == 2
    assert F5.parse("1/2") == 3
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_solve():
    m = qmat([[1, 1], [0, 1]])
    assert m.mat_vec(solve(m, [q(3), q(1)])) == [q(3), q(1)]
    # inconsistent system
    m2 = qmat([[1, 1], [1, 1]])
    assert solve(m2, [q(0), q(1)]) is None


def test_rational_parse_reduced():
    x = QQ.parse("4/6")
    assert x == Fraction(2, 3)
    assert QQ.show(x) == "2/3"
    assert QQ.show(QQ.parse("-3/9")) == "-1/3"


small_int = st.integers(min_value=-3, max_value=3)


@st.composite
def qq_matrix(draw):
    r = draw(st.integers(min_value=1, max_value=4))
    c = draw(st.integers(min_value=1, max_value=5))
    rows = draw(st.lists(st.lists(small_int, min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return Matrix.from_rows(QQ, [[q(x) for x in row] for row in rows])


@given(qq_matrix())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.cols
    for v in basis:
        assert all(x == 0 for x in m.mat_vec(v))
    # determinism, bit for bit
    assert kernel_basis(m) == basis


@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=0, max_size=4),
       st.permutations(range(4)))
@settings(max_examples=40, deadline=None)
def test_subspace_equal_is_equivalence(vectors, perm):
    vs = [[q(x) for x in v] for v in vectors]
    assert subspace_equal(QQ, vs, vs)
    shuffled = [vs[i] for i in perm if i < len(vs)]
    doubled = [[2 * x for x in v] for v in vs]
    assert subspace_equal(QQ, vs, shuffled + doubled)
    assert subspace_equal(QQ, shuffled + doubled, vs)
