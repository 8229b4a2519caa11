"""Exact exponential-time oracles for small instances.

Ground truth for testing the constructive algorithms: minimum piercing
(set cover over a finite candidate grid), maximum independent set, optimal
coloring, and maximum clique. All searches are deterministic (fixed
candidate and branch orders, strict-improvement updates) and fail loudly
on a size cap or time budget rather than return a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .coloring import Coloring, greedy_degeneracy_coloring
from .errors import (
    BudgetExceededError,
    GeometryError,
    InstanceTooLargeError,
    SchemaError,
)
from .geometry import Point, contains_point
from .graph import IntersectionGraph, build_graph_bruteforce, max_depth_omega
from .instance import Instance


@dataclass(frozen=True)
class ExactLimits:
    """Size caps per oracle and a shared wall-clock budget in seconds."""

    max_n_tau: int = 12
    max_n_nu: int = 24
    max_n_chi: int = 16
    time_budget: float = 60.0

    def __post_init__(self) -> None:
        if min(self.max_n_tau, self.max_n_nu, self.max_n_chi) < 1:
            raise SchemaError("oracle size caps must be positive")
        if self.time_budget <= 0:
            raise SchemaError("time budget must be positive")


class _Budget:
    """Wall-clock guard; cheap to tick, checked every few thousand nodes."""

    def __init__(self, seconds: float, what: str) -> None:
        self._deadline = time.monotonic() + seconds
        self._what = what
        self._nodes = 0

    def tick(self) -> None:
        self._nodes += 1
        if self._nodes % 4096 == 0 and time.monotonic() > self._deadline:
            raise BudgetExceededError(f"{self._what}: time budget exhausted")


def _require_size(what: str, n: int, cap: int) -> None:
    if n == 0:
        raise SchemaError(f"{what} of an empty instance")
    if n > cap:
        raise InstanceTooLargeError(f"{what}: {n} rectangles exceed the cap of {cap}")


def candidate_points(instance: Instance) -> Tuple[Point, ...]:
    """Lower-left candidate grid, restricted to covered points, in (x, y) order.

    Some optimal transversal uses only these points: any point can be moved
    to (max x_lo, max y_lo) of the rectangles containing it without leaving
    any of them, and those maxima are both low bounds of family members.
    """
    if instance.n == 0:
        raise SchemaError("candidate_points of an empty instance")
    xs = sorted({r.x_lo for r in instance.rects})
    ys = sorted({r.y_lo for r in instance.rects})
    out = []
    for x in xs:
        for y in ys:
            p = Point(x, y)
            if any(contains_point(r, p) for r in instance.rects):
                out.append(p)
    return tuple(out)


def _coverage_masks(
    instance: Instance, cands: Sequence[Point]
) -> Tuple[List[Point], List[int]]:
    """Distinct useful candidates with their coverage bitmasks.

    Keeps the first candidate per coverage set and drops candidates whose
    coverage is a strict subset of another's; neither pruning can change
    the optimal cover size.
    """
    kept_points: List[Point] = []
    kept_masks: List[int] = []
    seen: Dict[int, bool] = {}
    for p in cands:
        mask = 0
        for r in instance.rects:
            if contains_point(r, p):
                mask |= 1 << r.id
        if mask == 0 or mask in seen:
            continue
        seen[mask] = True
        kept_points.append(p)
        kept_masks.append(mask)
    dominated = [
        any(
            other != mask and mask & other == mask
            for other in kept_masks
        )
        for mask in kept_masks
    ]
    points = [p for p, d in zip(kept_points, dominated) if not d]
    masks = [m for m, d in zip(kept_masks, dominated) if not d]
    return points, masks


def exact_tau(
    instance: Instance,
    limits: ExactLimits = ExactLimits(),
    candidates: Optional[Sequence[Point]] = None,
) -> Tuple[int, Tuple[Point, ...]]:
    """Minimum piercing over the candidate grid (or a supplied point set).

    Iterative deepening on the cover size, branching on the uncovered
    rectangle with the fewest covering candidates. Returns one optimum.
    """
    _require_size("exact_tau", instance.n, limits.max_n_tau)
    budget = _Budget(limits.time_budget, "exact_tau")
    cands = list(candidates) if candidates is not None else list(candidate_points(instance))
    points, masks = _coverage_masks(instance, cands)
    n = instance.n
    full = (1 << n) - 1
    covered = 0
    for m in masks:
        covered |= m
    if covered != full:
        missing = next(i for i in range(n) if not covered >> i & 1)
        raise GeometryError(f"no candidate point pierces rect {missing}")

    per_rect: List[List[int]] = [[] for _ in range(n)]
    for ci, m in enumerate(masks):
        for i in range(n):
            if m >> i & 1:
                per_rect[i].append(ci)

    # Lower bound: rectangles no single candidate can pierce in pairs.
    co_coverable = [[False] * n for _ in range(n)]
    for m in masks:
        bits = [i for i in range(n) if m >> i & 1]
        for a in bits:
            for b in bits:
                co_coverable[a][b] = True
    packing: List[int] = []
    for i in range(n):
        if all(not co_coverable[i][j] for j in packing):
            packing.append(i)
    lower = len(packing)

    # Upper bound: greedy most-new-coverage, earliest candidate on ties.
    greedy_chosen: List[int] = []
    uncovered = full
    while uncovered:
        best_ci = max(
            range(len(masks)), key=lambda ci: (bin(masks[ci] & uncovered).count("1"), -ci)
        )
        greedy_chosen.append(best_ci)
        uncovered &= ~masks[best_ci]
    upper = len(greedy_chosen)

    if lower == upper:
        return upper, tuple(points[ci] for ci in greedy_chosen)

    chosen: List[int] = []

    def dfs(uncovered: int, depth_left: int) -> bool:
        budget.tick()
        if uncovered == 0:
            return True
        if depth_left == 0:
            return False
        target = min(
            (i for i in range(n) if uncovered >> i & 1),
            key=lambda i: (len(per_rect[i]), i),
        )
        for ci in per_rect[target]:
            chosen.append(ci)
            if dfs(uncovered & ~masks[ci], depth_left - 1):
                return True
            chosen.pop()
        return False

    for size in range(lower, upper):
        chosen.clear()
        if dfs(full, size):
            return size, tuple(points[ci] for ci in chosen)
    return upper, tuple(points[ci] for ci in greedy_chosen)


def _adjacency_masks(g: IntersectionGraph) -> List[int]:
    out = []
    for v in range(g.n):
        m = 0
        for u in g.adjacency[v]:
            m |= 1 << u
        out.append(m)
    return out


def exact_nu(
    instance: Instance, limits: ExactLimits = ExactLimits()
) -> Tuple[int, Tuple[int, ...]]:
    """Maximum independent set of the intersection graph, with witness ids.

    Branch and bound on the highest-degree remaining vertex; subproblems of
    maximum degree one are solved in closed form (take all isolated
    vertices and one endpoint per matching edge).
    """
    _require_size("exact_nu", instance.n, limits.max_n_nu)
    budget = _Budget(limits.time_budget, "exact_nu")
    g = build_graph_bruteforce(instance)
    adj = _adjacency_masks(g)
    n = g.n

    best_mask = 0
    taken = 0
    for v in range(n):
        if adj[v] & taken == 0:
            taken |= 1 << v
    best_mask = taken
    best_size = bin(best_mask).count("1")

    def search(avail: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        budget.tick()
        avail_count = bin(avail).count("1")
        if size + avail_count <= best_size:
            return
        max_deg = -1
        pivot = -1
        a = avail
        edges_doubled = 0
        while a:
            v = (a & -a).bit_length() - 1
            a &= a - 1
            d = bin(adj[v] & avail).count("1")
            edges_doubled += d
            if d > max_deg:
                max_deg = d
                pivot = v
        if max_deg <= 1:
            # avail induces a matching plus isolated vertices
            total = size + avail_count - edges_doubled // 2
            if total > best_size:
                result = chosen
                rest = avail
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    result |= 1 << v
                    rest &= ~adj[v]
                best_mask = result
                best_size = total
            return
        search(avail & ~(adj[pivot] | 1 << pivot), chosen | 1 << pivot, size + 1)
        search(avail & ~(1 << pivot), chosen, size)

    search((1 << n) - 1, 0, 0)
    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    return best_size, witness


def exact_omega_clique(
    g: IntersectionGraph, limits: ExactLimits = ExactLimits()
) -> int:
    """Maximum clique size by branch and bound on the graph alone."""
    if g.n > limits.max_n_chi:
        raise InstanceTooLargeError(
            f"exact_omega_clique: {g.n} vertices exceed the cap of {limits.max_n_chi}"
        )
    if g.n == 0:
        return 0
    budget = _Budget(limits.time_budget, "exact_omega_clique")
    adj = _adjacency_masks(g)
    best = 0

    def extend(allowed: int, size: int) -> None:
        nonlocal best
        budget.tick()
        if size > best:
            best = size
        while allowed:
            if size + bin(allowed).count("1") <= best:
                return
            v = (allowed & -allowed).bit_length() - 1
            allowed &= allowed - 1
            extend(allowed & adj[v], size + 1)

    extend((1 << g.n) - 1, 0)
    return best


def exact_chi(
    instance: Instance, limits: ExactLimits = ExactLimits()
) -> Tuple[int, Coloring]:
    """Optimal proper coloring of the intersection graph.

    Tries color counts upward from the clique number (maximum point depth)
    until a backtracking search succeeds; the greedy degeneracy coloring
    supplies the initial upper bound. New colors are introduced one past
    the current maximum, so the result is contiguous.
    """
    _require_size("exact_chi", instance.n, limits.max_n_chi)
    budget = _Budget(limits.time_budget, "exact_chi")
    g = build_graph_bruteforce(instance)
    n = g.n
    omega, _ = max_depth_omega(instance)
    greedy = greedy_degeneracy_coloring(g)
    if greedy.num_colors == omega:
        return omega, greedy

    def try_k(k: int) -> Optional[List[int]]:
        colors = [-1] * n
        forbid_count = [[0] * k for _ in range(n)]
        saturation = [0] * n
        degree = [g.degree(v) for v in range(n)]

        def pick() -> int:
            return max(
                (v for v in range(n) if colors[v] < 0),
                key=lambda v: (saturation[v], degree[v], -v),
            )

        def assign(v: int, c: int, delta: int) -> None:
            colors[v] = c if delta > 0 else -1
            for u in g.adjacency[v]:
                if colors[u] < 0 or u == v:
                    before = forbid_count[u][c]
                    forbid_count[u][c] = before + delta
                    if delta > 0 and before == 0:
                        saturation[u] += 1
                    elif delta < 0 and before == 1:
                        saturation[u] -= 1

        def rec(done: int, max_used: int) -> bool:
            budget.tick()
            if done == n:
                return True
            v = pick()
            limit = min(max_used + 1, k - 1)
            for c in range(limit + 1):
                if forbid_count[v][c] == 0:
                    assign(v, c, +1)
                    if rec(done + 1, max(max_used, c)):
                        return True
                    assign(v, c, -1)
            return False

        return colors if rec(0, -1) else None

    for k in range(omega, greedy.num_colors):
        sol = try_k(k)
        if sol is not None:
            return k, Coloring(tuple(sol), k, None)
    return greedy.num_colors, greedy
