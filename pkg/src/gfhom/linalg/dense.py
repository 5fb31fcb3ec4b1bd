"""Dense exact linear algebra over a prime field GF(p).

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``. Subspaces
are always carried as the nonzero rows of their reduced row echelon form,
so two subspaces are equal iff their arrays are equal.
"""

from __future__ import annotations

import os

import numpy as np

try:
    if os.environ.get("GFHOM_PURE_PYTHON"):
        raise ImportError
    from ._kernels_cy import rref_inplace as _rref_compiled
except ImportError:  # pragma: no cover - depends on the build
    _rref_compiled = None

from ._kernels_py import rref_inplace as _rref_python

BACKEND = "cython" if _rref_compiled is not None else "python"

_INT64_LIMIT = 2**63 - 1


def _rref_kernel(a, p):
    if _rref_compiled is not None and p < 2**31:
        return _rref_compiled(a, p)
    return _rref_python(a, p)


def asmat(a, p, cols=None):
    """Copy ``a`` into a fresh C-contiguous int64 matrix reduced mod p."""
    m = np.array(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size or cols is None else m.reshape(0, cols)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {m.shape}")
    if cols is not None and m.size == 0:
        m = m.reshape(m.shape[0], cols)
    return np.ascontiguousarray(m % p)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n):
    return np.eye(n, dtype=np.int64)


def matmul(a, b, p):
    """Matrix product mod p, falling back to Python ints if int64 could overflow."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 <= _INT64_LIMIT:
        return (a @ b) % p
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(np.int64)


def rref(a, p):
    """Reduced row echelon form and pivot columns (strictly increasing)."""
    m = asmat(a, p)
    pivots = _rref_kernel(m, p)
    return m, list(pivots)


def rank(a, p):
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_space(a, p, cols=None):
    """Canonical basis (RREF, zero rows dropped) of the span of the rows of a."""
    a = np.asarray(a, dtype=np.int64)
    if cols is None:
        cols = a.shape[1] if a.ndim == 2 else a.shape[0]
    if a.size == 0:
        return zeros(0, cols)
    r, piv = rref(a, p)
    return np.ascontiguousarray(r[: len(piv)])


def pivots_of(basis):
    """Pivot columns of a matrix already in RREF."""
    out = []
    for row in basis:
        nz = np.flatnonzero(row)
        out.append(int(nz[0]))
    return out


def kernel_basis(a, p):
    """Rows spanning the right null space {x : a x = 0}, in RREF."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    r, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(piv):
            basis[k, c] = (-r[row, f]) % p
    return row_space(basis, p, cols)


def nullity(a, p):
    return np.asarray(a).shape[1] - rank(a, p)


def solve(a, b, p):
    """Return the canonical x with a x = b (free variables zero), or None."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: a has {a.shape[0]} rows, b has {b.shape[0]}")
    n = a.shape[1]
    aug = np.hstack([a.reshape(a.shape[0], n), b])
    if aug.shape[0] == 0:
        x = zeros(n, b.shape[1])
        return x[:, 0] if vector else x
    r, piv = rref(aug, p)
    if piv and piv[-1] >= n:
        return None
    x = zeros(n, b.shape[1])
    for row, c in enumerate(piv):
        x[c] = r[row, n:]
    return x[:, 0] if vector else x


def inverse(a, p):
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, identity(n), p)
    if x is None or rank(a, p) < n:
        raise ValueError("matrix is singular")
    return x


def is_invertible(a, p):
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def reduce_mod(vectors, basis, p, piv=None):
    """Reduce row vectors modulo the span of an RREF ``basis``.

    The result vanishes on the basis pivot columns, hence is a canonical
    representative of each coset.
    """
    v = np.array(vectors, dtype=np.int64, ndmin=2)
    if len(basis) == 0:
        return v % p
    if piv is None:
        piv = pivots_of(basis)
    coeff = v[:, piv]
    return (v - matmul(coeff, basis, p)) % p


def coords(vectors, basis, p, piv=None, check=True):
    """Coordinates of row vectors in an RREF basis of a subspace containing them."""
    v = np.array(vectors, dtype=np.int64, ndmin=2)
    if piv is None:
        piv = pivots_of(basis)
    c = v[:, piv] % p
    if check and len(basis) and not np.array_equal(matmul(c, basis, p), v % p):
        raise ValueError("vector is not in the subspace")
    if check and len(basis) == 0 and np.any(v % p):
        raise ValueError("vector is not in the zero subspace")
    return c


def contains(basis, vectors, p):
    v = np.array(vectors, dtype=np.int64, ndmin=2)
    if v.size == 0:
        return True
    return not np.any(reduce_mod(v, basis, p))


def subspace_sum(u, v, p):
    return row_space(np.vstack([u, v]), p, u.shape[1])


def intersection(u, v, p):
    """Canonical basis of the intersection of two row spaces."""
    n = u.shape[1]
    if len(u) == 0 or len(v) == 0:
        return zeros(0, n)
    # x u = y v  <=>  [u; -v]^T [x; y] = 0
    stacked = np.vstack([u, (-v) % p])
    ker = kernel_basis(stacked.T, p)
    if len(ker) == 0:
        return zeros(0, n)
    return row_space(matmul(ker[:, : len(u)], u, p), p, n)


def complement(sub, whole, p):
    """RREF rows C with span(sub) + span(C) = span(whole), the sum direct.

    C is built from ``whole`` reduced modulo ``sub`` so coordinates of a
    reduced coset representative are read off C's pivot columns.
    """
    n = whole.shape[1]
    if len(whole) == 0:
        return zeros(0, n)
    red = reduce_mod(whole, sub, p)
    return row_space(red, p, n)


def column_space(a, p):
    """Basis of the column space, returned as RREF rows."""
    a = np.asarray(a, dtype=np.int64)
    return row_space(a.T, p, a.shape[0])
