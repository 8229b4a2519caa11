from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rectpierce import (
    GeometryError,
    Point,
    Rect,
    aspect_ratio,
    common_box,
    contains_point,
    intersection,
    intersects,
    longer_side,
    shorter_side,
    snap_point,
)

from helpers import CORNER_TRIPLE, rect, square

coords = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=16
)

sides = st.fractions(
    min_value=Fraction(1, 16), max_value=Fraction(30), max_denominator=16
)


@st.composite
def rects(draw, rid=0):
    x_lo = draw(coords)
    y_lo = draw(coords)
    return Rect(rid, x_lo, x_lo + draw(sides), y_lo, y_lo + draw(sides))


class TestRectValidation:
    def test_basic(self):
        r = rect(0, 0, 2, 1, 3)
        assert r.width == 2
        assert r.height == 2

    def test_zero_width_rejected(self):
        with pytest.raises(ValueError):
            rect(0, 1, 1, 0, 1)

    def test_inverted_interval_rejected(self):
        with pytest.raises(ValueError):
            rect(0, 2, 1, 0, 1)

    def test_negative_id_rejected(self):
        with pytest.raises(ValueError):
            rect(-1, 0, 1, 0, 1)

    def test_bool_id_rejected(self):
        # bool is an int subtype but not a valid id
        with pytest.raises(ValueError):
            Rect(True, Fraction(0), Fraction(1), Fraction(0), Fraction(1))

    def test_float_coordinate_rejected(self):
        with pytest.raises(TypeError):
            Rect(0, 0.0, 1.0, 0.0, 1.0)


class TestPoint:
    def test_coercion(self):
        p = Point(1, 2)
        assert p.x == Fraction(1)
        assert p.y == Fraction(2)

    def test_ordering(self):
        assert Point(0, 1) < Point(1, 0)
        assert Point(1, 0) < Point(1, 2)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            Point(0.5, 1)


class TestIntersects:
    def test_overlapping(self):
        assert intersects(rect(0, 0, 2, 0, 2), rect(1, 1, 3, 1, 3))

    def test_shared_edge_counts(self):
        # closed rectangles: touching boundaries intersect
        assert intersects(rect(0, 0, 1, 0, 1), rect(1, 1, 2, 0, 1))

    def test_shared_corner_counts(self):
        assert intersects(rect(0, 0, 1, 0, 1), rect(1, 1, 2, 1, 2))

    def test_disjoint(self):
        assert not intersects(rect(0, 0, 1, 0, 1), rect(1, 3, 4, 0, 1))

    def test_symmetric(self):
        a, b = rect(0, 0, 2, 0, 2), rect(1, 1, 3, 1, 3)
        assert intersects(a, b) == intersects(b, a)

    @given(rects(0), rects(1))
    def test_interval_separation(self, a, b):
        separated = (
            a.x_hi < b.x_lo
            or b.x_hi < a.x_lo
            or a.y_hi < b.y_lo
            or b.y_hi < a.y_lo
        )
        assert intersects(a, b) == (not separated)


class TestIntersection:
    def test_overlap_box(self):
        box = intersection(rect(0, 0, 2, 0, 2), rect(1, 1, 3, 1, 3))
        assert box == (Fraction(1), Fraction(2), Fraction(1), Fraction(2))

    def test_corner_touch_degenerate(self):
        box = intersection(rect(0, 0, 1, 0, 1), rect(1, 1, 2, 1, 2))
        assert box == (Fraction(1), Fraction(1), Fraction(1), Fraction(1))

    def test_disjoint_none(self):
        assert intersection(rect(0, 0, 1, 0, 1), rect(1, 3, 4, 0, 1)) is None

    @given(rects(0), rects(1))
    def test_consistent_with_intersects(self, a, b):
        box = intersection(a, b)
        assert (box is not None) == intersects(a, b)
        if box is not None:
            assert box.x_lo <= box.x_hi and box.y_lo <= box.y_hi
            assert box.x_lo >= max(a.x_lo, b.x_lo)
            assert box.x_hi <= min(a.x_hi, b.x_hi)


class TestContainsPoint:
    def test_interior(self):
        assert contains_point(rect(0, 0, 2, 0, 2), Point(1, 1))

    def test_boundary(self):
        assert contains_point(rect(0, 0, 2, 0, 2), Point(0, 2))

    def test_outside(self):
        assert not contains_point(rect(0, 0, 2, 0, 2), Point(3, 1))

    def test_rational(self):
        assert contains_point(
            rect(0, 0, 1, 0, 1), Point(Fraction(1, 2), Fraction(1, 3))
        )


class TestSides:
    def test_square(self):
        r = square(0, 0, 0)
        assert shorter_side(r) == 1
        assert longer_side(r) == 1
        assert aspect_ratio(r) == 1

    def test_wide(self):
        r = rect(0, 0, 3, 0, 1)
        assert shorter_side(r) == 1
        assert longer_side(r) == 3
        assert aspect_ratio(r) == 3

    def test_rational_ratio(self):
        r = rect(0, 0, Fraction(5, 2), 0, 1)
        assert aspect_ratio(r) == Fraction(5, 2)


class TestSnapPoint:
    def test_already_on_corner_stays(self):
        assert snap_point(Point(1, 1), CORNER_TRIPLE.rects) == Point(1, 1)

    def test_interior_point_moves_to_max_lower_corner(self):
        p = Point(Fraction(3, 2), Fraction(3, 2))
        assert snap_point(p, CORNER_TRIPLE.rects) == Point(1, 1)

    def test_single_rect(self):
        assert snap_point(Point(Fraction(1, 2), Fraction(1, 2)), (square(0, 0, 0),)) == Point(0, 0)

    def test_point_outside_some_rect_rejected(self):
        with pytest.raises(GeometryError):
            snap_point(Point(10, 10), CORNER_TRIPLE.rects)

    @given(rects(0), rects(1), rects(2))
    def test_snapped_point_still_covered(self, a, b, c):
        # snap within the subfamily containing the original point
        p = Point(a.x_lo, a.y_lo)
        covering = tuple(r for r in (a, b, c) if contains_point(r, p))
        q = snap_point(p, covering)
        assert all(contains_point(r, q) for r in covering)
        assert q.x == max(r.x_lo for r in covering)
        assert q.y == max(r.y_lo for r in covering)


class TestCommonBox:
    def test_two_squares(self):
        box = common_box((rect(0, 0, 2, 0, 2), rect(1, 1, 3, 1, 3)))
        assert box == (Fraction(1), Fraction(2), Fraction(1), Fraction(2))

    def test_single(self):
        r = rect(0, 0, 2, 1, 3)
        assert common_box((r,)) == (r.x_lo, r.x_hi, r.y_lo, r.y_hi)

    def test_disjoint_gives_none(self):
        assert common_box((square(0, 0, 0), square(1, 3, 0))) is None

    def test_empty_raises(self):
        with pytest.raises(GeometryError):
            common_box(())


eps_values = st.fractions(
    min_value=Fraction(1, 8), max_value=Fraction(8), max_denominator=8
)


@given(st.data())
def test_corner_lemma(data):
    """A box no larger than eps intersecting a rect no smaller than eps
    must have a corner inside the rect."""
    eps = data.draw(eps_values)
    scale = st.fractions(min_value=Fraction(1), max_value=Fraction(4), max_denominator=4)
    big_w = eps * data.draw(scale)
    big_h = eps * data.draw(scale)
    big = Rect(0, Fraction(0), big_w, Fraction(0), big_h)

    small_frac = st.fractions(
        min_value=Fraction(1, 8), max_value=Fraction(1), max_denominator=8
    )
    small_w = eps * data.draw(small_frac)
    small_h = eps * data.draw(small_frac)
    # position the small box so the two overlap
    off = st.fractions(min_value=Fraction(0), max_value=Fraction(1), max_denominator=8)
    x_lo = -small_w + data.draw(off) * (big_w + small_w)
    y_lo = -small_h + data.draw(off) * (big_h + small_h)
    small = Rect(1, x_lo, x_lo + small_w, y_lo, y_lo + small_h)

    assert intersects(big, small)
    corners = [
        Point(small.x_lo, small.y_lo),
        Point(small.x_lo, small.y_hi),
        Point(small.x_hi, small.y_lo),
        Point(small.x_hi, small.y_hi),
    ]
    assert any(contains_point(big, c) for c in corners)
