"""Shared builders for the test suite."""

from fractions import Fraction

from rectpierce import GeneratorConfig, Instance, Rect, generate_random


def rect(rid, x_lo, x_hi, y_lo, y_hi):
    return Rect(
        rid,
        Fraction(x_lo),
        Fraction(x_hi),
        Fraction(y_lo),
        Fraction(y_hi),
    )


def square(rid, x, y, side=1):
    return rect(rid, x, Fraction(x) + side, y, Fraction(y) + side)


def instance(*rects, r=None):
    return Instance(tuple(rects), None if r is None else Fraction(r))


def random_instance(n, r=1, seed=0, window=100, side_min=1, side_max=10):
    cfg = GeneratorConfig(
        n=n,
        r_max=Fraction(r),
        window=Fraction(window),
        side_min=Fraction(side_min),
        side_max=Fraction(side_max),
        seed=seed,
    )
    return generate_random(cfg)


TWO_DISJOINT_SQUARES = instance(rect(0, 0, 1, 0, 1), rect(1, 3, 4, 0, 1))

TWO_OVERLAPPING_SQUARES = instance(rect(0, 0, 2, 0, 2), rect(1, 1, 3, 1, 3))

CORNER_TRIPLE = instance(
    rect(0, 0, 2, 0, 2),
    rect(1, 1, 3, 0, 2),
    rect(2, 0, 2, 1, 3),
)
