"""Pure-Python kernels, the fallback for the compiled extension.

Same contracts as ``_kernels.pyx``: inputs are rank-encoded int64 bounds
(order-isomorphic to the exact rational coordinates), so every comparison
here is an exact integer comparison.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def brute_pairs(xlo, xhi, ylo, yhi):
    """All intersecting pairs (u, v), u < v, by explicit O(n^2) testing.

    Returns two int64 arrays in (u, v)-ascending order.
    """
    xlo = list(xlo)
    xhi = list(xhi)
    ylo = list(ylo)
    yhi = list(yhi)
    n = len(xlo)
    us = []
    vs = []
    for i in range(n):
        xli = xlo[i]
        xhi_i = xhi[i]
        yli = ylo[i]
        yhi_i = yhi[i]
        for j in range(i + 1, n):
            if (
                xli <= xhi[j]
                and xlo[j] <= xhi_i
                and yli <= yhi[j]
                and ylo[j] <= yhi_i
            ):
                us.append(i)
                vs.append(j)
    return np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)


def grid_max_depth(xlo, xhi, cand_x, y_lo_idx, y_hi_idx, n_cand_y):
    """Maximum containment depth over the candidate grid.

    Candidate points are (cand_x[a], cand_y[b]); the y side is given per
    rectangle as the half-open index window [y_lo_idx[i], y_hi_idx[i]) of
    candidate-y values the rectangle covers. Returns (depth, a, b) for the
    lexicographically first maximizer, scanning x then y in ascending order.
    """
    xlo = list(xlo)
    xhi = list(xhi)
    cand_x = list(cand_x)
    y_lo_idx = list(y_lo_idx)
    y_hi_idx = list(y_hi_idx)
    n = len(xlo)
    best = -1
    best_a = 0
    best_b = 0
    diff = [0] * (n_cand_y + 1)
    for a, vx in enumerate(cand_x):
        for k in range(n_cand_y + 1):
            diff[k] = 0
        for i in range(n):
            if xlo[i] <= vx <= xhi[i] and y_lo_idx[i] < y_hi_idx[i]:
                diff[y_lo_idx[i]] += 1
                diff[y_hi_idx[i]] -= 1
        run = 0
        for b in range(n_cand_y):
            run += diff[b]
            if run > best:
                best = run
                best_a = a
                best_b = b
    return best, best_a, best_b
