"""Integer kernels for the multiplicative-closure test of class partitions.

Partitions are passed as a label array (``labels[g]`` = class of element
``g``) together with the group's Cayley table.  Each kernel has a numba
version and a pure-numpy version; ``SCHURKIT_DISABLE_NUMBA=1`` selects numpy.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and os.environ.get("SCHURKIT_DISABLE_NUMBA", "") not in ("1", "true", "yes")
BACKEND = "numba" if USE_NUMBA else "numpy"


def class_product_counts_numpy(labels, mul, r, i):
    """``out[j, g]`` = number of pairs (x, y) with x in class i, y in class j, xy = g."""
    n = labels.shape[0]
    xs = np.flatnonzero(labels == i)
    flat = labels[None, :] * n + mul[xs, :]
    return np.bincount(flat.ravel(), minlength=r * n).reshape(r, n)


def is_closed_numpy(labels, mul, r):
    n = labels.shape[0]
    flat = (labels[:, None] * r + labels[None, :]) * n + mul
    cnt = np.bincount(flat.ravel(), minlength=r * r * n).reshape(r, r, n)
    rep = np.zeros(r, dtype=np.int64)
    rep[labels[::-1]] = np.arange(n - 1, -1, -1)
    return bool((cnt == cnt[:, :, rep[labels]]).all())


if USE_NUMBA:

    @numba.njit(cache=True)
    def class_product_counts_numba(labels, mul, r, i):
        n = labels.shape[0]
        out = np.zeros((r, n), dtype=np.int64)
        for x in range(n):
            if labels[x] != i:
                continue
            for y in range(n):
                out[labels[y], mul[x, y]] += 1
        return out

    @numba.njit(cache=True)
    def is_closed_numba(labels, mul, r):
        n = labels.shape[0]
        cnt = np.zeros((r, r, n), dtype=np.int64)
        for x in range(n):
            lx = labels[x]
            for y in range(n):
                cnt[lx, labels[y], mul[x, y]] += 1
        rep = np.full(r, -1, dtype=np.int64)
        for g in range(n):
            if rep[labels[g]] < 0:
                rep[labels[g]] = g
        for i in range(r):
            for j in range(i, r):
                for g in range(n):
                    if cnt[i, j, g] != cnt[i, j, rep[labels[g]]]:
                        return False
        return True

    class_product_counts = class_product_counts_numba
    is_closed = is_closed_numba
else:
    class_product_counts_numba = None
    is_closed_numba = None
    class_product_counts = class_product_counts_numpy
    is_closed = is_closed_numpy
