"""Kernel dispatch and coordinate-rank compression.

The hot loops (pairwise intersection tests, grid depth counting) run on
rank-encoded integer bounds. Ranks are assigned by exactly sorting the
rational coordinates once per instance; after that every hot comparison is
an int comparison, with identical outcomes.

The compiled extension is used when it was built; setting the environment
variable RECTPIERCE_PURE_PYTHON=1 before import forces the pure fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .geometry import Rect

if os.environ.get("RECTPIERCE_PURE_PYTHON"):
    from . import _kernels_py as _backend
else:
    try:
        from . import _kernels as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _backend

BACKEND: str = _backend.BACKEND_NAME


def rank_values(values: Sequence[Fraction]) -> Tuple[List[Fraction], Dict[Fraction, int]]:
    """Sorted distinct values and the value -> rank map."""
    distinct = sorted(set(values))
    return distinct, {v: i for i, v in enumerate(distinct)}


@dataclass(frozen=True)
class RankedBounds:
    """Rank-encoded bounds of a rectangle family.

    xs/ys decode ranks back to exact coordinates; the arrays hold, per
    rectangle, the ranks of its four bounds.
    """

    xs: Tuple[Fraction, ...]
    ys: Tuple[Fraction, ...]
    xlo: np.ndarray
    xhi: np.ndarray
    ylo: np.ndarray
    yhi: np.ndarray

    @property
    def n(self) -> int:
        return len(self.xlo)


def rank_bounds(rects: Sequence[Rect]) -> RankedBounds:
    """Compress a family's coordinates to ranks, one exact sort per axis."""
    xs, xrank = rank_values([r.x_lo for r in rects] + [r.x_hi for r in rects])
    ys, yrank = rank_values([r.y_lo for r in rects] + [r.y_hi for r in rects])
    xlo = np.fromiter((xrank[r.x_lo] for r in rects), dtype=np.int64, count=len(rects))
    xhi = np.fromiter((xrank[r.x_hi] for r in rects), dtype=np.int64, count=len(rects))
    ylo = np.fromiter((yrank[r.y_lo] for r in rects), dtype=np.int64, count=len(rects))
    yhi = np.fromiter((yrank[r.y_hi] for r in rects), dtype=np.int64, count=len(rects))
    return RankedBounds(tuple(xs), tuple(ys), xlo, xhi, ylo, yhi)


def intersecting_pairs(rb: RankedBounds) -> Tuple[np.ndarray, np.ndarray]:
    """All intersecting pairs (u, v) with u < v, in (u, v) order."""
    return _backend.brute_pairs(rb.xlo, rb.xhi, rb.ylo, rb.yhi)


def max_grid_depth(
    rb: RankedBounds,
    cand_x: np.ndarray,
    y_lo_idx: np.ndarray,
    y_hi_idx: np.ndarray,
    n_cand_y: int,
) -> Tuple[int, int, int]:
    """Deepest candidate grid point; see the backend docstring."""
    return _backend.grid_max_depth(rb.xlo, rb.xhi, cand_x, y_lo_idx, y_hi_idx, n_cand_y)
