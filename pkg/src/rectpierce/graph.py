"""Intersection graphs of rectangle families.

Two independent constructions are provided and tested against each other:
a quadratic all-pairs build and a sweep over x-events with an interval
structure on the active y-ranges. Both work on rank-encoded coordinates,
so all comparisons are exact.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .errors import SchemaError
from .geometry import Point
from .instance import Instance
from .kernels import RankedBounds, intersecting_pairs, max_grid_depth, rank_bounds


@dataclass(frozen=True)
class IntersectionGraph:
    """Undirected graph over rect ids; adjacency lists are sorted tuples."""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def _graph_from_pairs(n: int, us: Sequence[int], vs: Sequence[int]) -> IntersectionGraph:
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in zip(us, vs):
        adj[int(u)].append(int(v))
        adj[int(v)].append(int(u))
    return IntersectionGraph(n, tuple(tuple(sorted(a)) for a in adj))


def build_graph_bruteforce(instance: Instance) -> IntersectionGraph:
    """Edge {a, b} iff the closed rectangles intersect; every pair tested."""
    if instance.n == 0:
        return IntersectionGraph(0, ())
    rb = rank_bounds(instance.rects)
    us, vs = intersecting_pairs(rb)
    return _graph_from_pairs(instance.n, us, vs)


class _ActiveIntervals:
    """Active y-intervals during the sweep, over the rank domain [0, size).

    Supports insert/remove of closed rank intervals and the two queries the
    sweep needs: ids whose interval contains a rank (stabbing, via canonical
    segment-tree nodes) and ids whose low endpoint lies in a rank range
    (via a sorted list of (low, id)).
    """

    def __init__(self, size: int) -> None:
        self._leaves = 1
        while self._leaves < max(size, 1):
            self._leaves *= 2
        self._nodes: List[set] = [set() for _ in range(2 * self._leaves)]
        self._starts: List[Tuple[int, int]] = []
        self._bounds: dict = {}

    def _canonical(self, lo: int, hi: int) -> Iterator[int]:
        # nodes whose spans exactly tile the closed rank interval [lo, hi]
        a = lo + self._leaves
        b = hi + 1 + self._leaves
        while a < b:
            if a & 1:
                yield a
                a += 1
            if b & 1:
                b -= 1
                yield b
            a //= 2
            b //= 2

    def insert(self, lo: int, hi: int, ident: int) -> None:
        self._bounds[ident] = (lo, hi)
        for node in self._canonical(lo, hi):
            self._nodes[node].add(ident)
        insort(self._starts, (lo, ident))

    def remove(self, ident: int) -> None:
        lo, hi = self._bounds.pop(ident)
        for node in self._canonical(lo, hi):
            self._nodes[node].discard(ident)
        idx = bisect_left(self._starts, (lo, ident))
        self._starts.pop(idx)

    def stabbed_by(self, rank: int) -> Iterator[int]:
        """Ids of active intervals containing the rank."""
        node = rank + self._leaves
        while node >= 1:
            yield from self._nodes[node]
            node //= 2

    def starting_in(self, lo: int, hi: int) -> Iterator[int]:
        """Ids of active intervals whose low endpoint is in [lo, hi]."""
        left = bisect_left(self._starts, (lo, -1))
        right = bisect_right(self._starts, (hi, 1 << 62))
        for _, ident in self._starts[left:right]:
            yield ident

    def low_of(self, ident: int) -> int:
        return self._bounds[ident][0]


def build_graph_sweep(instance: Instance) -> IntersectionGraph:
    """Sweep-line construction; identical output to the brute-force build.

    Events are rectangle entries and exits, sorted by x-rank with entries
    first at equal x so that boundary contact counts. An entering rectangle
    is matched against the active set in two disjoint parts: actives whose
    y-low lies inside its y-range, and actives strictly overhanging its
    y-low (found by stabbing). Runs in O((n + m) log n) plus list upkeep.
    """
    n = instance.n
    if n == 0:
        return IntersectionGraph(0, ())
    rb = rank_bounds(instance.rects)
    ylo = rb.ylo.tolist()
    yhi = rb.yhi.tolist()
    xlo = rb.xlo.tolist()
    xhi = rb.xhi.tolist()

    # (x rank, phase, id); phase 0 = enter, 1 = exit, so touching x-extents
    # are both active at the shared coordinate.
    events = sorted(
        [(xlo[i], 0, i) for i in range(n)] + [(xhi[i], 1, i) for i in range(n)]
    )
    active = _ActiveIntervals(len(rb.ys))
    us: List[int] = []
    vs: List[int] = []
    for _, phase, i in events:
        if phase == 1:
            active.remove(i)
            continue
        lo, hi = ylo[i], yhi[i]
        partners = list(active.starting_in(lo, hi))
        partners.extend(a for a in active.stabbed_by(lo) if active.low_of(a) < lo)
        for a in partners:
            u, v = (a, i) if a < i else (i, a)
            us.append(u)
            vs.append(v)
        active.insert(lo, hi, i)
    return _graph_from_pairs(n, us, vs)


@dataclass(frozen=True)
class DegeneracyOrder:
    """Removal sequence of the min-degree peeling and its max removal degree.

    For every position k, order[k] has at most ``degeneracy`` neighbors in
    order[k:], which is what makes the reverse order safe for greedy
    coloring.
    """

    order: Tuple[int, ...]
    degeneracy: int


def degeneracy_order(g: IntersectionGraph) -> DegeneracyOrder:
    """Peel a minimum-degree vertex repeatedly, ties broken by smallest id."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    order: List[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, d)
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return DegeneracyOrder(tuple(order), degeneracy)


def max_depth_omega(instance: Instance) -> Tuple[int, Point]:
    """Clique number as maximum point depth, with a witness point.

    Cliques of axis-parallel rectangles share a common point, and any
    deepest point can be slid to (some x-low, some y-low) without leaving
    the rectangles that cover it, so searching that finite grid is exact.
    The witness is the lexicographically smallest deepest candidate.
    """
    if instance.n == 0:
        raise SchemaError("max_depth_omega of an empty instance")
    rb = rank_bounds(instance.rects)
    cand_x = np.unique(rb.xlo)
    cand_y = np.unique(rb.ylo)
    cy = cand_y.tolist()
    y_lo_idx = np.fromiter(
        (bisect_left(cy, int(lo)) for lo in rb.ylo), dtype=np.int64, count=rb.n
    )
    y_hi_idx = np.fromiter(
        (bisect_right(cy, int(hi)) for hi in rb.yhi), dtype=np.int64, count=rb.n
    )
    depth, a, b = max_grid_depth(rb, cand_x, y_lo_idx, y_hi_idx, len(cy))
    witness = Point(rb.xs[int(cand_x[a])], rb.ys[int(cand_y[b])])
    return depth, witness
