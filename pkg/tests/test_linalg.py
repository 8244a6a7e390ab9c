import numpy as np
import pytest
from hypothesis import given, strategies as st

from akblocks import linalg
from akblocks.linalg import Subspace
from oracles import det_mod_p, rank_mod_p

P = 7


@st.composite
def matrices(draw, max_rows=6, max_cols=6, p=P):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    data = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return np.array(data, dtype=np.int64).reshape(rows, cols)


@given(matrices())
def test_rank_matches_oracle(m):
    assert linalg.rank(m, P) == rank_mod_p(m.tolist(), P)


@given(matrices())
def test_rref_properties(m):
    r, piv = linalg.rref(m, P)
    assert len(piv) == linalg.rank(m, P)
    for i, c in enumerate(piv):
        assert r[i, c] == 1
        assert all(r[k, c] == 0 for k in range(r.shape[0]) if k != i)
    assert Subspace.span(m, m.shape[1], P) == Subspace.span(r, m.shape[1], P)


@given(matrices())
def test_kernels(m):
    k = linalg.kernel(m, P)
    assert k.dim + linalg.rank(m, P) == m.shape[1]
    assert not (linalg.matmul(m, k.basis.T, P)).any()
    lk = linalg.left_kernel(m, P)
    assert lk.dim + linalg.rank(m, P) == m.shape[0]
    assert not (linalg.matmul(lk.basis, m, P)).any()


@given(matrices(max_rows=4, max_cols=4))
def test_inverse_agrees_with_determinant(m):
    if m.shape[0] != m.shape[1]:
        return
    if det_mod_p(m.tolist(), P) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m, P)
    else:
        inv = linalg.inverse(m, P)
        assert np.array_equal(linalg.matmul(m, inv, P), np.eye(m.shape[0], dtype=np.int64))


@given(matrices(), st.data())
def test_solve(m, data):
    x = np.array(data.draw(st.lists(st.integers(0, P - 1), min_size=m.shape[1], max_size=m.shape[1])))
    b = linalg.matmul(m, x, P)
    sol = linalg.solve(m, b, P)
    assert sol is not None and np.array_equal(linalg.matmul(m, sol, P), b)


def test_solve_inconsistent():
    assert linalg.solve(np.array([[1, 0], [1, 0]]), np.array([0, 1]), P) is None


@given(matrices(), matrices())
def test_intersection_dimension(a, b):
    if a.shape[1] != b.shape[1]:
        return
    s1, s2 = Subspace.span(a, a.shape[1], P), Subspace.span(b, b.shape[1], P)
    meet, join = s1 & s2, s1 + s2
    assert meet.dim + join.dim == s1.dim + s2.dim
    assert s1.contains_space(meet) and s2.contains_space(meet)


def test_matmul_large_modulus_is_exact():
    p = 2**31 - 1
    rng = np.random.default_rng(0)
    a = rng.integers(0, p, size=(5, 40))
    b = rng.integers(0, p, size=(40, 3))
    expect = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(40)) % p for j in range(3)] for i in range(5)]
    assert linalg.matmul(a, b, p).tolist() == expect


def test_split_idempotents_of_group_algebra():
    # F_7[C_3]: x^3 = 1 splits into three characters since 3 | 6
    p, n = 7, 3
    table = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            table[i, j, (i + j) % n] = 1
    one = np.array([1, 0, 0])
    ids = linalg.split_idempotents(table, one, p)
    assert len(ids) == 3
    assert np.array_equal(sum(ids) % p, one)
    mult = lambda x, y: np.einsum("i,j,ijk->k", x, y, table) % p  # noqa: E731
    for e1 in ids:
        assert np.array_equal(mult(e1, e1), e1)
        for e2 in ids:
            if e2 is not e1:
                assert not mult(e1, e2).any()
