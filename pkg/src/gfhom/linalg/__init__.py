"""Exact dense linear algebra over GF(p).

The row-reduction kernel is compiled with Cython when the extension is
available and falls back to a numpy implementation otherwise; set
``GFHOM_PURE_PYTHON=1`` to force the fallback.
"""

from .dense import (
    BACKEND,
    asmat,
    column_space,
    complement,
    contains,
    coords,
    identity,
    intersection,
    inverse,
    is_invertible,
    kernel_basis,
    matmul,
    nullity,
    pivots_of,
    rank,
    reduce_mod,
    row_space,
    rref,
    solve,
    subspace_sum,
    zeros,
)

__all__ = [
    "BACKEND",
    "asmat",
    "column_space",
    "complement",
    "contains",
    "coords",
    "identity",
    "intersection",
    "inverse",
    "is_invertible",
    "kernel_basis",
    "matmul",
    "nullity",
    "pivots_of",
    "rank",
    "reduce_mod",
    "row_space",
    "rref",
    "solve",
    "subspace_sum",
    "zeros",
]
