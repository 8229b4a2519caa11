"""Transversal construction by repeated shortest-rectangle piercing.

Each round first tries to finish the remaining family with a single common
point. Failing that, it takes a rectangle of minimum shorter side, lays a
grid of points along its two long edges, and removes everything those
points pierce, which is provably the closed neighborhood of the chosen
rectangle (asserted at runtime). The chosen rectangles are pairwise
disjoint, so together the emitted points and the certificate ids bound the
transversal number from above and the independence number from below.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import GeometryError, InvariantViolation, SchemaError
from .geometry import Point, Rect, common_box, shorter_side
from .instance import Instance
from .kernels import rank_bounds
from .scalar import format_scalar, parse_scalar


@dataclass(frozen=True)
class TraceStep:
    """One round of the construction.

    kind is "eps" (grid placed on rect ``rect``) or "helly" (single common
    point, ``rect`` is None); ``added`` counts points appended to the
    transversal and ``removed`` lists the rect ids retired this round, in
    increasing id order.
    """

    step: int
    kind: str
    rect: Optional[int]
    added: int
    removed: Tuple[int, ...]


@dataclass(frozen=True)
class PiercingResult:
    """Transversal points, disjointness certificate, and the full trace.

    k_per_side is the largest number of segments laid along a long edge in
    any round (1 when the run ends on its first round).
    """

    transversal: Tuple[Point, ...]
    certificate: Tuple[int, ...]
    k_per_side: int
    trace: Tuple[TraceStep, ...]


def select_min_rect(remaining: Sequence[Rect]) -> Rect:
    """The rectangle with minimum shorter side, ties broken by smallest id."""
    if not remaining:
        raise GeometryError("select_min_rect of an empty family")
    return min(remaining, key=lambda r: (shorter_side(r), r.id))


def grid_segments(r: Rect) -> int:
    """Number of segments each long edge is split into: max(1, ceil(long/short))."""
    return max(1, math.ceil(max(r.width, r.height) / shorter_side(r)))


def edge_grid_points(r: Rect) -> Tuple[Point, ...]:
    """Evenly spaced points on the two long edges, including both corners.

    With k = max(1, ceil(longer/shorter)) segments, each long edge carries
    k+1 points spaced longer/k <= shorter apart, so any rectangle with both
    sides >= the shorter side that touches ``r`` contains one of them. The
    points of the low edge come first, then the high edge, both in
    ascending position. For a square the long edges are taken horizontal.
    """
    k = grid_segments(r)
    if r.height <= r.width:
        step = r.width / k
        xs = [r.x_lo + j * step for j in range(k + 1)]
        return tuple(
            [Point(x, r.y_lo) for x in xs] + [Point(x, r.y_hi) for x in xs]
        )
    step = r.height / k
    ys = [r.y_lo + j * step for j in range(k + 1)]
    return tuple([Point(r.x_lo, y) for y in ys] + [Point(r.x_hi, y) for y in ys])


def helly_point(family: Sequence[Rect]) -> Optional[Point]:
    """Lower-left corner of the family's common box, or None if there is none."""
    if not family:
        raise GeometryError("helly_point of an empty family")
    box = common_box(family)
    if box is None:
        return None
    return Point(box.x_lo, box.y_lo)


def _first_disjoint_pair(
    ids: Sequence[int], xlo: List[int], xhi: List[int], ylo: List[int], yhi: List[int]
) -> Optional[Tuple[int, int]]:
    for ai in range(len(ids)):
        a = ids[ai]
        for bi in range(ai + 1, len(ids)):
            b = ids[bi]
            if xhi[a] < xlo[b] or xhi[b] < xlo[a] or yhi[a] < ylo[b] or yhi[b] < ylo[a]:
                return a, b
    return None


def construct_transversal(instance: Instance) -> PiercingResult:
    """Run the full construction; see the module docstring for the loop.

    Runtime self-checks (raising InvariantViolation on failure): the pierced
    set of every grid round equals the closed neighborhood of the chosen
    rectangle; the sequence of minimum shorter sides never decreases; every
    round removes at least one rectangle.
    """
    if instance.n == 0:
        raise SchemaError("cannot pierce an empty instance")
    rects = instance.rects
    rb = rank_bounds(rects)
    xlo = rb.xlo.tolist()
    xhi = rb.xhi.tolist()
    ylo = rb.ylo.tolist()
    yhi = rb.yhi.tolist()
    short = [shorter_side(r) for r in rects]

    remaining: List[int] = list(range(len(rects)))
    points: List[Point] = []
    certificate: List[int] = []
    trace: List[TraceStep] = []
    k_per_side = 1
    prev_eps: Optional[Fraction] = None
    step = 0

    while remaining:
        # Common-point test on ranks: nonempty iff on both axes the largest
        # low bound does not exceed the smallest high bound.
        max_xlo = max(xlo[i] for i in remaining)
        min_xhi = min(xhi[i] for i in remaining)
        max_ylo = max(ylo[i] for i in remaining)
        min_yhi = min(yhi[i] for i in remaining)
        if max_xlo <= min_xhi and max_ylo <= min_yhi:
            points.append(Point(rb.xs[max_xlo], rb.ys[max_ylo]))
            certificate.append(remaining[0])
            trace.append(TraceStep(step, "helly", None, 1, tuple(remaining)))
            remaining = []
            break

        e = min(remaining, key=lambda i: (short[i], i))
        eps = short[e]
        if prev_eps is not None and eps < prev_eps:
            raise InvariantViolation(
                f"minimum shorter side decreased from {prev_eps} to {eps}"
            )
        prev_eps = eps
        grid = edge_grid_points(rects[e])
        k = len(grid) // 2 - 1
        k_per_side = max(k_per_side, k)

        re_ = rects[e]
        horizontal = re_.height <= re_.width

        def hits_grid(i: int) -> bool:
            # Rank prechecks first; the exact segment-index window only for
            # rectangles that overlap the grid's span and straddle a grid line.
            if horizontal:
                if not (ylo[i] <= ylo[e] <= yhi[i] or ylo[i] <= yhi[e] <= yhi[i]):
                    return False
                if xhi[i] < xlo[e] or xlo[i] > xhi[e]:
                    return False
                lo = rects[i].x_lo if xlo[i] > xlo[e] else re_.x_lo
                hi = rects[i].x_hi if xhi[i] < xhi[e] else re_.x_hi
                width = re_.width
                jmin = math.ceil((lo - re_.x_lo) * k / width)
                jmax = math.floor((hi - re_.x_lo) * k / width)
                return jmin <= jmax
            if not (xlo[i] <= xlo[e] <= xhi[i] or xlo[i] <= xhi[e] <= xhi[i]):
                return False
            if yhi[i] < ylo[e] or ylo[i] > yhi[e]:
                return False
            lo = rects[i].y_lo if ylo[i] > ylo[e] else re_.y_lo
            hi = rects[i].y_hi if yhi[i] < yhi[e] else re_.y_hi
            height = re_.height
            jmin = math.ceil((lo - re_.y_lo) * k / height)
            jmax = math.floor((hi - re_.y_lo) * k / height)
            return jmin <= jmax

        pierced = [i for i in remaining if hits_grid(i)]
        neighbors = [
            i
            for i in remaining
            if not (
                xhi[i] < xlo[e] or xlo[i] > xhi[e] or yhi[i] < ylo[e] or ylo[i] > yhi[e]
            )
        ]
        if pierced != neighbors:
            raise InvariantViolation(
                f"round {step}: pierced set {pierced} differs from the closed "
                f"neighborhood {neighbors} of rect {e}"
            )
        if not pierced:
            raise InvariantViolation(f"round {step}: nothing removed")

        points.extend(grid)
        certificate.append(e)
        trace.append(TraceStep(step, "eps", e, len(grid), tuple(pierced)))
        removed_set = set(pierced)
        remaining = [i for i in remaining if i not in removed_set]
        step += 1

    if trace[-1].kind == "eps":
        # The run ended by emptying the family with a grid round. The final
        # family had no common point, so it contains two disjoint rectangles;
        # both survived every earlier round, so swapping them in for the last
        # chosen rectangle keeps the certificate pairwise disjoint and grows
        # it by one, which is what the size bound needs in this ending.
        pair = _first_disjoint_pair(trace[-1].removed, xlo, xhi, ylo, yhi)
        if pair is None:
            raise InvariantViolation(
                "final family has no disjoint pair despite lacking a common point"
            )
        certificate = certificate[:-1] + [pair[0], pair[1]]

    return PiercingResult(
        tuple(points), tuple(certificate), k_per_side, tuple(trace)
    )


def serialize_piercing(res: PiercingResult) -> str:
    doc = {
        "points": [[format_scalar(p.x), format_scalar(p.y)] for p in res.transversal],
        "certificate": list(res.certificate),
        "k_per_side": res.k_per_side,
        "trace": [
            {
                "step": t.step,
                "kind": t.kind,
                "rect": t.rect,
                "added": t.added,
                "removed": list(t.removed),
            }
            for t in res.trace
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _parse_id(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{where}: expected a non-negative integer id")
    return value


def parse_piercing(text: str) -> PiercingResult:
    """Parse a piercing document; inverse of serialize_piercing."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    required = {"points", "certificate", "k_per_side", "trace"}
    if set(doc) != required:
        raise SchemaError(f"top-level keys must be exactly {sorted(required)}")

    if not isinstance(doc["points"], list):
        raise SchemaError("'points' must be an array")
    points = []
    for pos, entry in enumerate(doc["points"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError(f"point {pos}: must be an [x, y] pair")
        points.append(
            Point(
                parse_scalar(entry[0], f"point {pos}: x"),
                parse_scalar(entry[1], f"point {pos}: y"),
            )
        )

    if not isinstance(doc["certificate"], list):
        raise SchemaError("'certificate' must be an array")
    certificate = [
        _parse_id(v, f"certificate entry {pos}")
        for pos, v in enumerate(doc["certificate"])
    ]

    k = doc["k_per_side"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SchemaError("'k_per_side' must be a positive integer")

    if not isinstance(doc["trace"], list):
        raise SchemaError("'trace' must be an array")
    steps = []
    for pos, entry in enumerate(doc["trace"]):
        where = f"trace step {pos}"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: must be an object")
        keys = {"step", "kind", "rect", "added", "removed"}
        if set(entry) != keys:
            raise SchemaError(f"{where}: keys must be exactly {sorted(keys)}")
        idx = entry["step"]
        if isinstance(idx, bool) or not isinstance(idx, int) or idx < 0:
            raise SchemaError(f"{where}: bad step index")
        kind = entry["kind"]
        if kind not in ("eps", "helly"):
            raise SchemaError(f"{where}: kind must be 'eps' or 'helly'")
        rect = entry["rect"]
        if kind == "helly":
            if rect is not None:
                raise SchemaError(f"{where}: a helly step carries no rect id")
        else:
            rect = _parse_id(rect, f"{where}: rect")
        added = entry["added"]
        if isinstance(added, bool) or not isinstance(added, int) or added < 1:
            raise SchemaError(f"{where}: bad added count")
        if not isinstance(entry["removed"], list):
            raise SchemaError(f"{where}: 'removed' must be an array")
        removed = tuple(
            _parse_id(v, f"{where}: removed entry {i}")
            for i, v in enumerate(entry["removed"])
        )
        steps.append(TraceStep(idx, kind, rect, added, removed))

    return PiercingResult(tuple(points), tuple(certificate), k, tuple(steps))
