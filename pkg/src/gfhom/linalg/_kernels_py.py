"""Pure numpy row reduction over GF(p); fallback for the compiled kernel."""

import numpy as np


def rref_inplace(a, p):
    """Reduce ``a`` (int64, C-contiguous, entries in [0, p)) to RREF in place.

    Returns the list of pivot columns.
    """
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r, c:] = (a[r, c:] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(f[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots
