"""Greedy coloring along the reverse degeneracy order.

Coloring the peeling order backwards means every vertex sees at most
``degeneracy`` already-colored neighbors, so the smallest-absent-color rule
never needs more than degeneracy + 1 colors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import SchemaError
from .graph import DegeneracyOrder, IntersectionGraph, degeneracy_order


@dataclass(frozen=True)
class Coloring:
    """Color per rect id, the color count, and the order that produced it.

    order_used is None for colorings that were parsed from JSON or found by
    the exact search; the wire format does not carry it.
    """

    colors: Tuple[int, ...]
    num_colors: int
    order_used: Optional[DegeneracyOrder] = None


def greedy_degeneracy_coloring(g: IntersectionGraph) -> Coloring:
    """Color in reverse peeling order, smallest color absent among neighbors."""
    if g.n == 0:
        raise SchemaError("cannot color an empty graph")
    order = degeneracy_order(g)
    colors: List[int] = [-1] * g.n
    for v in reversed(order.order):
        taken = {colors[u] for u in g.adjacency[v] if colors[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors), max(colors) + 1, order)


def validate_coloring(g: IntersectionGraph, c: Coloring) -> bool:
    """True iff proper on g and the colors used are exactly 0..num_colors-1."""
    if len(c.colors) != g.n:
        raise SchemaError(
            f"coloring has {len(c.colors)} entries for a graph on {g.n} vertices"
        )
    for u in range(g.n):
        for v in g.adjacency[u]:
            if u < v and c.colors[u] == c.colors[v]:
                return False
    return set(c.colors) == set(range(c.num_colors))


def serialize_coloring(c: Coloring) -> str:
    doc = {"colors": list(c.colors), "num_colors": c.num_colors}
    return json.dumps(doc, indent=2) + "\n"


def parse_coloring(text: str) -> Coloring:
    """Parse a coloring document; order_used is not on the wire, so it is None."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if set(doc) != {"colors", "num_colors"}:
        raise SchemaError("top-level keys must be exactly ['colors', 'num_colors']")
    if not isinstance(doc["colors"], list):
        raise SchemaError("'colors' must be an array")
    colors = []
    for pos, v in enumerate(doc["colors"]):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise SchemaError(f"color {pos}: expected a non-negative integer")
        colors.append(v)
    k = doc["num_colors"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SchemaError("'num_colors' must be a positive integer")
    return Coloring(tuple(colors), k, None)
