"""Rectangle families: container, JSON round-trip, and seeded generators.

The JSON document shape is::

    {"r": 3,                      # optional declared aspect-ratio bound
     "rects": [{"id": 0, "x": [0, 1], "y": [0, "1/2"]}, ...]}

where every bound is a JSON integer or a string ``"p/q"``. Rectangles are
listed in id order and ids run 0..n-1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import SchemaError
from .geometry import Rect, aspect_ratio
from .scalar import ScalarLike, as_scalar, format_scalar, parse_ratio, parse_scalar

STRUCTURED_KINDS = ("disjoint_grid", "common_point_clique", "chain")


@dataclass(frozen=True)
class Instance:
    """A finite family of rectangles with ids 0..n-1, in id order."""

    rects: Tuple[Rect, ...]
    r_declared: Optional[Fraction] = None

    def __post_init__(self) -> None:
        for i, r in enumerate(self.rects):
            if r.id != i:
                raise SchemaError(f"rect {r.id}: expected id {i} at position {i}")
        if self.r_declared is not None and self.rects:
            worst = family_ratio(self)
            if worst > self.r_declared:
                raise SchemaError(
                    f"declared ratio bound {self.r_declared} exceeded: "
                    f"family ratio is {worst}"
                )

    @property
    def n(self) -> int:
        return len(self.rects)


def family_ratio(instance: Instance) -> Fraction:
    """Exact maximum aspect ratio over the family. Errors on an empty one."""
    if not instance.rects:
        raise SchemaError("family_ratio of an empty instance")
    return max(aspect_ratio(r) for r in instance.rects)


def _parse_interval(obj: object, axis: str, rect_id: object) -> Tuple[Fraction, Fraction]:
    if not isinstance(obj, list) or len(obj) != 2:
        raise SchemaError(f"rect {rect_id}: {axis} must be a [lo, hi] pair")
    lo = parse_scalar(obj[0], f"rect {rect_id}: {axis} lower bound")
    hi = parse_scalar(obj[1], f"rect {rect_id}: {axis} upper bound")
    return lo, hi


def parse_instance(text: str) -> Instance:
    """Parse an instance document, validating the schema and all invariants."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    unknown = set(doc) - {"r", "rects"}
    if unknown:
        raise SchemaError(f"unknown top-level keys: {sorted(unknown)}")
    if "rects" not in doc or not isinstance(doc["rects"], list):
        raise SchemaError("missing or malformed 'rects' array")

    rects = []
    seen_ids = set()
    for pos, entry in enumerate(doc["rects"]):
        if not isinstance(entry, dict):
            raise SchemaError(f"rect at position {pos}: must be an object")
        unknown = set(entry) - {"id", "x", "y"}
        if unknown:
            raise SchemaError(f"rect at position {pos}: unknown keys {sorted(unknown)}")
        rid = entry.get("id")
        if isinstance(rid, bool) or not isinstance(rid, int):
            raise SchemaError(f"rect at position {pos}: missing or non-integer id")
        if rid in seen_ids:
            raise SchemaError(f"rect {rid}: duplicate id")
        seen_ids.add(rid)
        x_lo, x_hi = _parse_interval(entry.get("x"), "x", rid)
        y_lo, y_hi = _parse_interval(entry.get("y"), "y", rid)
        if x_lo >= x_hi:
            raise SchemaError(f"rect {rid}: zero or negative width")
        if y_lo >= y_hi:
            raise SchemaError(f"rect {rid}: zero or negative height")
        rects.append(Rect(rid, x_lo, x_hi, y_lo, y_hi))

    r_declared = parse_ratio(doc["r"]) if "r" in doc else None
    return Instance(tuple(rects), r_declared)


def serialize_instance(instance: Instance) -> str:
    """Serialize to the canonical document form; inverse of parse_instance."""
    doc: dict = {}
    if instance.r_declared is not None:
        doc["r"] = format_scalar(instance.r_declared)
    doc["rects"] = [
        {
            "id": r.id,
            "x": [format_scalar(r.x_lo), format_scalar(r.x_hi)],
            "y": [format_scalar(r.y_lo), format_scalar(r.y_hi)],
        }
        for r in instance.rects
    ]
    return json.dumps(doc, indent=2) + "\n"


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator (SplitMix64), portable across languages.

    state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    return z ^ (z >> 31), all in 64-bit wrapping arithmetic.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], unbiased via rejection sampling."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        m = hi - lo + 1
        limit = (2**64 // m) * m
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % m)


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for the random generator.

    Corners land on the 1/resolution grid inside [0, window]^2, every
    shorter side falls in [side_min, side_max], and every aspect ratio is
    at most r_max.
    """

    n: int
    r_max: Fraction = field(default=Fraction(1))
    window: Fraction = field(default=Fraction(100))
    side_min: Fraction = field(default=Fraction(1))
    side_max: Fraction = field(default=Fraction(10))
    resolution: int = 1000
    seed: int = 0

    def __init__(
        self,
        n: int,
        r_max: ScalarLike = 1,
        window: ScalarLike = 100,
        side_min: ScalarLike = 1,
        side_max: ScalarLike = 10,
        resolution: int = 1000,
        seed: int = 0,
    ) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r_max", as_scalar(r_max))
        object.__setattr__(self, "window", as_scalar(window))
        object.__setattr__(self, "side_min", as_scalar(side_min))
        object.__setattr__(self, "side_max", as_scalar(side_max))
        object.__setattr__(self, "resolution", resolution)
        object.__setattr__(self, "seed", seed)
        if not isinstance(n, int) or n < 1:
            raise SchemaError(f"n must be a positive integer, got {n!r}")
        if self.r_max < 1:
            raise SchemaError(f"r_max must be >= 1, got {self.r_max}")
        if not 0 < self.side_min <= self.side_max:
            raise SchemaError("need 0 < side_min <= side_max")
        if self.side_max > self.window:
            raise SchemaError(
                f"infeasible: side_max {self.side_max} exceeds window {self.window}"
            )
        if not isinstance(resolution, int) or resolution < 1:
            raise SchemaError(f"resolution must be a positive integer, got {resolution!r}")


def generate_random(cfg: GeneratorConfig) -> Instance:
    """Draw a reproducible instance from a SplitMix64 stream.

    Draw order per rectangle, with Q = cfg.resolution (all side and position
    values are counted in grid units of 1/Q):

    1. shorter side units, uniform in [ceil(side_min*Q), floor(side_max*Q)]
    2. longer side units, uniform in [shorter units,
       min(floor(r_max * shorter units), floor(window * Q))]; the window cap
       keeps every rectangle placeable
    3. one raw 64-bit word; low bit 0 makes the rectangle wide, 1 makes it tall
    4. x offset units, uniform in [0, floor((window - width) * Q)]
    5. y offset units, uniform in [0, floor((window - height) * Q)]

    Uniform draws use rejection sampling as in SplitMix64.randint, so two
    implementations of this recipe produce identical instances.
    """
    q = cfg.resolution
    s_lo = math.ceil(cfg.side_min * q)
    s_hi = math.floor(cfg.side_max * q)
    if s_lo > s_hi:
        raise SchemaError(
            f"infeasible: no multiple of 1/{q} lies in "
            f"[{cfg.side_min}, {cfg.side_max}]"
        )
    rng = SplitMix64(cfg.seed)
    rects = []
    for i in range(cfg.n):
        s_units = rng.randint(s_lo, s_hi)
        l_hi = min(math.floor(cfg.r_max * s_units), math.floor(cfg.window * q))
        l_units = rng.randint(s_units, l_hi)
        tall = rng.next_u64() & 1
        if tall:
            w_units, h_units = s_units, l_units
        else:
            w_units, h_units = l_units, s_units
        x_max = math.floor((cfg.window - Fraction(w_units, q)) * q)
        y_max = math.floor((cfg.window - Fraction(h_units, q)) * q)
        x_units = rng.randint(0, x_max)
        y_units = rng.randint(0, y_max)
        rects.append(
            Rect(
                i,
                Fraction(x_units, q),
                Fraction(x_units + w_units, q),
                Fraction(y_units, q),
                Fraction(y_units + h_units, q),
            )
        )
    return Instance(tuple(rects), cfg.r_max)


def generate_structured(kind: str, n: int) -> Instance:
    """Fixed families with known answers, used as oracle fixtures.

    disjoint_grid: n pairwise-disjoint unit squares on a grid.
    common_point_clique: n unit squares that all contain the point (1, 1).
    chain: n unit squares where consecutive pairs overlap and no others do.
    """
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"n must be a positive integer, got {n!r}")
    rects = []
    if kind == "disjoint_grid":
        cols = math.isqrt(n - 1) + 1
        for i in range(n):
            x = 2 * (i % cols)
            y = 2 * (i // cols)
            rects.append(Rect(i, x, x + 1, y, y + 1))
    elif kind == "common_point_clique":
        for i in range(n):
            lo = Fraction(i, n)
            rects.append(Rect(i, lo, lo + 1, lo, lo + 1))
    elif kind == "chain":
        for i in range(n):
            lo = Fraction(3 * i, 4)
            rects.append(Rect(i, lo, lo + 1, 0, 1))
    else:
        raise SchemaError(f"unknown structured kind {kind!r}; choose from {STRUCTURED_KINDS}")
    return Instance(tuple(rects), Fraction(1))
