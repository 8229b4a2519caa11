"""Exact rational scalars and their JSON encoding.

Every coordinate and length in this package is a ``fractions.Fraction``,
stored in lowest terms with a positive denominator, so all predicates are
decided exactly. Floats are rejected at the construction boundary; the only
place a value is ever converted to float is the SVG emitter.

On the wire a scalar is either a JSON integer or a string ``"p/q"`` with an
integer ``p`` and a positive integer ``q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import SchemaError

Scalar = Fraction

ScalarLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int or Fraction to a Fraction, rejecting floats and bools."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected int or Fraction, got {type(value).__name__}")
    return Fraction(value)


def parse_scalar(value: object, where: str = "value") -> Fraction:
    """Parse a JSON-level scalar: an integer or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected integer or 'p/q' string, got boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise SchemaError(f"{where}: malformed rational string {value!r}")
        if "/" in value:
            num_s, den_s = value.split("/")
            if int(den_s) == 0:
                raise SchemaError(f"{where}: zero denominator in {value!r}")
            return Fraction(int(num_s), int(den_s))
        return Fraction(int(value))
    raise SchemaError(
        f"{where}: expected integer or 'p/q' string, got {type(value).__name__}"
    )


def parse_ratio(value: object, where: str = "r") -> Fraction:
    """Parse the declared aspect-ratio bound: integer, decimal number, or string.

    A JSON float is read through its decimal text (``2.5`` becomes ``5/2``),
    never through its binary expansion.
    """
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected number or string, got boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        return parse_scalar(value, where)
    raise SchemaError(f"{where}: expected number or string, got {type(value).__name__}")


def format_scalar(value: Fraction) -> Union[int, str]:
    """Encode a Fraction for JSON: an int when integral, else ``"p/q"``."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def scalar_to_float(value: Fraction) -> float:
    """Lossy conversion, reserved for rendering."""
    return value.numerator / value.denominator
