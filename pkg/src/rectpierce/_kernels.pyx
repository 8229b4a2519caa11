# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the rank-encoded hot loops.

Mirrors ``_kernels_py`` exactly; the dispatcher in ``kernels`` picks
whichever is available.
"""

import numpy as np

BACKEND_NAME = "compiled"


def brute_pairs(const long long[::1] xlo, const long long[::1] xhi,
                const long long[::1] ylo, const long long[::1] yhi):
    """All intersecting pairs (u, v), u < v, by explicit O(n^2) testing."""
    cdef Py_ssize_t n = xlo.shape[0]
    cdef Py_ssize_t i, j
    cdef Py_ssize_t count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (xlo[i] <= xhi[j] and xlo[j] <= xhi[i]
                    and ylo[i] <= yhi[j] and ylo[j] <= yhi[i]):
                count += 1
    us_arr = np.empty(count, dtype=np.int64)
    vs_arr = np.empty(count, dtype=np.int64)
    cdef long long[::1] us = us_arr
    cdef long long[::1] vs = vs_arr
    cdef Py_ssize_t k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (xlo[i] <= xhi[j] and xlo[j] <= xhi[i]
                    and ylo[i] <= yhi[j] and ylo[j] <= yhi[i]):
                us[k] = i
                vs[k] = j
                k += 1
    return us_arr, vs_arr


def grid_max_depth(const long long[::1] xlo, const long long[::1] xhi,
                   const long long[::1] cand_x,
                   const long long[::1] y_lo_idx, const long long[::1] y_hi_idx,
                   Py_ssize_t n_cand_y):
    """Maximum containment depth over the candidate grid.

    Returns (depth, a, b) for the lexicographically first maximizer,
    scanning candidate x then candidate y in ascending order.
    """
    cdef Py_ssize_t n = xlo.shape[0]
    cdef Py_ssize_t ncx = cand_x.shape[0]
    cdef Py_ssize_t a, b, i, k
    cdef long long vx, run, best = -1
    cdef Py_ssize_t best_a = 0, best_b = 0
    diff_arr = np.zeros(n_cand_y + 1, dtype=np.int64)
    cdef long long[::1] diff = diff_arr
    for a in range(ncx):
        vx = cand_x[a]
        for k in range(n_cand_y + 1):
            diff[k] = 0
        for i in range(n):
            if xlo[i] <= vx and vx <= xhi[i] and y_lo_idx[i] < y_hi_idx[i]:
                diff[y_lo_idx[i]] += 1
                diff[y_hi_idx[i]] -= 1
        run = 0
        for b in range(n_cand_y):
            run += diff[b]
            if run > best:
                best = run
                best_a = a
                best_b = b
    return int(best), int(best_a), int(best_b)
