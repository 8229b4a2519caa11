"""Closed axis-parallel rectangles over exact rationals, and their predicates.

Rectangles are closed sets: touching boundaries count as intersection and a
boundary point pierces. That convention is what lets a corner argument and
the common-point (Helly) step work without epsilon fudging.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import GeometryError
from .scalar import ScalarLike, as_scalar


@dataclass(frozen=True, order=True)
class Point:
    """A point with exact rational coordinates. Ordered lexicographically."""

    x: Fraction
    y: Fraction

    def __init__(self, x: ScalarLike, y: ScalarLike) -> None:
        object.__setattr__(self, "x", as_scalar(x))
        object.__setattr__(self, "y", as_scalar(y))


@dataclass(frozen=True)
class Rect:
    """A closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi].

    Both extents must be strictly positive; degenerate boxes are rejected
    because the aspect ratio of a segment is undefined.
    """

    id: int
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    def __init__(
        self,
        id: int,
        x_lo: ScalarLike,
        x_hi: ScalarLike,
        y_lo: ScalarLike,
        y_hi: ScalarLike,
    ) -> None:
        if isinstance(id, bool) or not isinstance(id, int) or id < 0:
            raise GeometryError(f"rect id must be a non-negative integer, got {id!r}")
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "x_lo", as_scalar(x_lo))
        object.__setattr__(self, "x_hi", as_scalar(x_hi))
        object.__setattr__(self, "y_lo", as_scalar(y_lo))
        object.__setattr__(self, "y_hi", as_scalar(y_hi))
        if not self.x_lo < self.x_hi:
            raise GeometryError(f"rect {id}: zero or negative width")
        if not self.y_lo < self.y_hi:
            raise GeometryError(f"rect {id}: zero or negative height")

    @property
    def width(self) -> Fraction:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> Fraction:
        return self.y_hi - self.y_lo


class Box(NamedTuple):
    """A closed box that, unlike Rect, may have zero width and/or height."""

    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction


def intersects(a: Rect, b: Rect) -> bool:
    """True iff the closed rectangles share at least one point.

    Symmetric and reflexive; a shared corner or edge counts.
    """
    return (
        a.x_lo <= b.x_hi
        and b.x_lo <= a.x_hi
        and a.y_lo <= b.y_hi
        and b.y_lo <= a.y_hi
    )


def intersection(a: Rect, b: Rect) -> Optional[Box]:
    """The common closed box of two rectangles, or None when they are disjoint.

    The result may be degenerate (a segment or a single point), which is why
    it is returned as a Box rather than a Rect.
    """
    x_lo = max(a.x_lo, b.x_lo)
    x_hi = min(a.x_hi, b.x_hi)
    y_lo = max(a.y_lo, b.y_lo)
    y_hi = min(a.y_hi, b.y_hi)
    if x_lo > x_hi or y_lo > y_hi:
        return None
    return Box(x_lo, x_hi, y_lo, y_hi)


def contains_point(r: Rect, p: Point) -> bool:
    """Closed containment: boundary points are inside."""
    return r.x_lo <= p.x <= r.x_hi and r.y_lo <= p.y <= r.y_hi


def shorter_side(r: Rect) -> Fraction:
    return min(r.width, r.height)


def longer_side(r: Rect) -> Fraction:
    return max(r.width, r.height)


def aspect_ratio(r: Rect) -> Fraction:
    """Longer side over shorter side, exactly; always >= 1."""
    return longer_side(r) / shorter_side(r)


def snap_point(p: Point, family: Iterable[Rect]) -> Point:
    """Snap a point to the lower-left canonical position within its cover.

    Let S be the rectangles of ``family`` that contain ``p``. The result is
    (max of x_lo over S, max of y_lo over S), which is still contained in
    every member of S. Raises GeometryError when S is empty.
    """
    covering = [r for r in family if contains_point(r, p)]
    if not covering:
        raise GeometryError(f"no rectangle contains point ({p.x}, {p.y})")
    return Point(max(r.x_lo for r in covering), max(r.y_lo for r in covering))


def common_box(rects: Sequence[Rect]) -> Optional[Box]:
    """The closed box common to all rectangles, or None when empty."""
    if not rects:
        raise GeometryError("common_box of an empty family")
    x_lo = max(r.x_lo for r in rects)
    x_hi = min(r.x_hi for r in rects)
    y_lo = max(r.y_lo for r in rects)
    y_hi = min(r.y_hi for r in rects)
    if x_lo > x_hi or y_lo > y_hi:
        return None
    return Box(x_lo, x_hi, y_lo, y_hi)
