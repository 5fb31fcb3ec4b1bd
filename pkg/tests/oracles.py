"""Independent slow reference computations used by the tests."""

import itertools

import numpy as np

from gfhom import linalg as la


def brute_force_submodules(m):
    """All invariant subspaces, by testing every subspace of the underlying space."""
    p, d = m.algebra.p, m.dim
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=d) if any(v)]
    seen = {}
    zero = np.zeros((0, d), dtype=np.int64)
    seen[zero.tobytes() + b"0"] = zero
    for r in range(1, d + 1):
        for combo in itertools.combinations(vecs, r):
            s = la.row_space(np.array(combo), p, d)
            if len(s) != r:
                continue
            key = s.tobytes() + str(len(s)).encode()
            if key in seen:
                continue
            if all(la.contains(s, la.matmul(s, mat.T, p), p) for mat in m.mats):
                seen[key] = s
    return seen


def multiset_count(part_dims, max_dim):
    """Number of multisets of indecomposables (given by their dimensions) with total dim 1..max_dim."""
    ways = [1] + [0] * max_dim
    for d in part_dims:
        for total in range(d, max_dim + 1):
            ways[total] += ways[total - d]
    return sum(ways[1:])
