import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfhom import linalg as la
from gfhom.linalg import _kernels_py

PRIMES = [2, 3, 5, 7, 31]


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    p = draw(st.sampled_from(PRIMES))
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    vals = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
    return p, np.array(vals, dtype=np.int64).reshape(r, c)


def test_rref_small_gf2():
    a = np.array([[1, 1, 0], [1, 1, 1], [0, 0, 1]])
    r, piv = la.rref(a, 2)
    assert piv == [0, 2]
    assert r[:2].tolist() == [[1, 1, 0], [0, 0, 1]]


def test_rref_gf5_scales_pivots():
    r, piv = la.rref([[2, 4], [3, 3]], 5)
    assert piv == [0, 1]
    assert r.tolist() == [[1, 0], [0, 1]]


def test_backend_is_reported():
    assert la.BACKEND in ("cython", "python")


@given(matrices())
def test_rank_nullity(data):
    p, a = data
    assert la.rank(a, p) + la.nullity(a, p) == a.shape[1]


@given(matrices())
def test_kernel_is_annihilated(data):
    p, a = data
    k = la.kernel_basis(a, p)
    if len(k) and a.shape[0]:
        assert not la.matmul(a, k.T, p).any()


@given(matrices())
def test_compiled_and_python_kernels_agree(data):
    p, a = data
    x = la.asmat(a, p, a.shape[1])
    y = x.copy()
    piv_py = _kernels_py.rref_inplace(x, p)
    r, piv = la.rref(y, p)
    assert piv == list(piv_py)
    assert np.array_equal(r, x)


@given(matrices())
def test_rref_is_idempotent(data):
    p, a = data
    r, _ = la.rref(a, p)
    r2, _ = la.rref(r, p)
    assert np.array_equal(r, r2)


@given(matrices(), st.data())
def test_solve_finds_preimages(data, draw):
    p, a = data
    x = np.array(draw.draw(st.lists(st.integers(0, p - 1), min_size=a.shape[1], max_size=a.shape[1])), dtype=np.int64)
    b = la.matmul(a, x, p)
    sol = la.solve(a, b, p)
    assert sol is not None
    assert np.array_equal(la.matmul(a, sol, p), b)


@given(matrices(), matrices())
def test_dimension_formula(d1, d2):
    p, a = d1
    _, b = d2
    cols = min(a.shape[1], b.shape[1])
    u = la.row_space(a[:, :cols] % p, p, cols)
    v = la.row_space(b[:, :cols] % p, p, cols)
    s = la.subspace_sum(u, v, p)
    i = la.intersection(u, v, p)
    assert len(s) + len(i) == len(u) + len(v)
    assert la.contains(s, u, p) and la.contains(s, v, p)
    assert la.contains(u, i, p) and la.contains(v, i, p)


@given(matrices())
def test_complement_spans_whole(data):
    p, a = data
    u = la.row_space(a, p, a.shape[1])
    whole = la.identity(a.shape[1])
    c = la.complement(u, whole, p)
    assert len(c) + len(u) == a.shape[1]
    assert len(la.subspace_sum(u, c, p)) == a.shape[1]


@given(st.sampled_from(PRIMES), st.integers(1, 6), st.data())
def test_inverse(p, n, data):
    vals = data.draw(st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n))
    a = np.array(vals, dtype=np.int64).reshape(n, n)
    if la.is_invertible(a, p):
        assert np.array_equal(la.matmul(a, la.inverse(a, p), p), np.eye(n, dtype=np.int64))
    else:
        assert la.rank(a, p) < n


def test_coords_roundtrip():
    basis = la.row_space([[1, 2, 0], [0, 1, 1]], 3)
    v = (2 * basis[0] + basis[1]) % 3
    c = la.coords(v, basis, 3)
    assert np.array_equal(la.matmul(c, basis, 3), v.reshape(1, -1))


def test_coords_rejects_outside_vectors():
    basis = la.row_space([[1, 0, 0]], 2)
    with pytest.raises(ValueError):
        la.coords([0, 1, 0], basis, 2)


def test_matmul_large_prime_does_not_overflow():
    p = 2**61 - 1
    a = np.full((3, 3), p - 1, dtype=np.int64)
    expect = (np.array(a, dtype=object) @ np.array(a, dtype=object)) % p
    assert la.matmul(a, a, p).tolist() == expect.tolist()


def test_large_prime_rank_uses_python_path():
    p = 2**31 + 11  # prime above the compiled-kernel limit
    a = np.array([[1, 2], [2, 4]], dtype=np.int64)
    assert la.rank(a, p) == 1


def test_column_space():
    a = np.array([[1, 0], [1, 0], [0, 0]])
    assert la.column_space(a, 2).tolist() == [[1, 1, 0]]
