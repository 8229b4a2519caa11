"""Independent certificate checking and corpus statistics.

Nothing in here trusts the code that produced a result: every predicate is
recomputed from the instance and the result document alone. The piercing
verifier replays the whole construction from the trace with its own
arithmetic, so any tampering with points, certificate, or trace flips at
least one check.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .coloring import Coloring, greedy_degeneracy_coloring
from .errors import SchemaError
from .exact import ExactLimits, exact_nu, exact_tau
from .geometry import Point, Rect, common_box
from .graph import build_graph_bruteforce, max_depth_omega
from .instance import Instance, family_ratio
from .kernels import rank_bounds
from .pierce import PiercingResult, construct_transversal


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    instance_id: str
    checks: Tuple[Check, ...]
    ratios: Dict[str, float]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def serialize_report(report: VerificationReport) -> str:
    doc = {
        "instance": report.instance_id,
        "checks": [
            {"name": c.name, "pass": c.passed, "detail": c.detail}
            for c in report.checks
        ],
        "ratios": report.ratios,
    }
    return json.dumps(doc, indent=2) + "\n"


def _trace_consistency(instance: Instance, res: PiercingResult) -> Check:
    """Structural checks on the trace alone, no geometry."""
    name = "trace_consistency"
    n = instance.n
    if not res.trace:
        return Check(name, False, "empty trace")
    seen: set = set()
    total_added = 0
    for pos, t in enumerate(res.trace):
        if t.step != pos:
            return Check(name, False, f"trace step {pos} numbered {t.step}")
        if t.kind == "helly" and pos != len(res.trace) - 1:
            return Check(name, False, f"helly step at position {pos} is not last")
        if not t.removed:
            return Check(name, False, f"step {pos} removed nothing")
        for i in t.removed:
            if not 0 <= i < n:
                return Check(name, False, f"step {pos} removes unknown rect {i}")
            if i in seen:
                return Check(name, False, f"rect {i} removed twice")
            seen.add(i)
        if t.kind == "eps" and t.rect not in t.removed:
            return Check(name, False, f"step {pos} does not remove its own rect")
        total_added += t.added
    if seen != set(range(n)):
        missing = sorted(set(range(n)) - seen)
        return Check(name, False, f"rects never removed: {missing}")
    if total_added != len(res.transversal):
        return Check(
            name,
            False,
            f"trace adds {total_added} points but result has {len(res.transversal)}",
        )
    return Check(name, True, f"{len(res.trace)} steps covering all {n} rects")


def _expected_grid(r: Rect) -> List[Point]:
    """The verifier's own derivation of the edge grid for one rectangle."""
    width = r.x_hi - r.x_lo
    height = r.y_hi - r.y_lo
    if height <= width:
        k = max(1, math.ceil(width / height))
        xs = [r.x_lo + Fraction(j, k) * width for j in range(k + 1)]
        return [Point(x, r.y_lo) for x in xs] + [Point(x, r.y_hi) for x in xs]
    k = max(1, math.ceil(height / width))
    ys = [r.y_lo + Fraction(j, k) * height for j in range(k + 1)]
    return [Point(r.x_lo, y) for y in ys] + [Point(r.x_hi, y) for y in ys]


def _replay(
    instance: Instance, res: PiercingResult
) -> Tuple[Check, Check, Check]:
    """Reconstruct the run: expected points, removal sets, and neighborhoods.

    Returns the points_match_trace, claim1_equality, and k_per_side checks.
    Containment of replayed grid points is decided by binary search on the
    sorted grid positions, a deliberately different route from the
    arithmetic the construction itself uses.
    """
    rects = instance.rects
    rb = rank_bounds(rects)
    xlo = rb.xlo.tolist()
    xhi = rb.xhi.tolist()
    ylo = rb.ylo.tolist()
    yhi = rb.yhi.tolist()
    short = [min(r.x_hi - r.x_lo, r.y_hi - r.y_lo) for r in rects]

    remaining = list(range(len(rects)))
    expected_points: List[Point] = []
    claim1 = Check("claim1_equality", True, "pierced set equals closed neighborhood at every step")
    k_seen = 1

    def fail(detail: str) -> Tuple[Check, Check, Check]:
        return (
            Check("points_match_trace", False, detail),
            claim1,
            Check("k_per_side", False, "replay aborted"),
        )

    for t in res.trace:
        if not remaining:
            return fail(f"step {t.step} after the family emptied")
        rem_set = set(remaining)
        if any(i not in rem_set for i in t.removed):
            return fail(f"step {t.step} removes already-removed rects")
        if t.kind == "helly":
            if set(t.removed) != rem_set:
                return fail(
                    f"helly step {t.step} must remove the whole remaining family"
                )
            box = common_box([rects[i] for i in remaining])
            if box is None:
                return fail(
                    f"helly step {t.step}: remaining family has no common point"
                )
            expected_points.append(Point(box.x_lo, box.y_lo))
            if t.added != 1:
                return fail(f"helly step {t.step} claims {t.added} points")
            remaining = []
            continue

        e = t.rect
        if e is None or e not in rem_set:
            return fail(f"step {t.step} names no remaining rect")
        expected_e = min(remaining, key=lambda i: (short[i], i))
        if e != expected_e:
            return fail(f"step {t.step} chose rect {e}, expected {expected_e}")
        grid = _expected_grid(rects[e])
        if t.added != len(grid):
            return fail(f"step {t.step} claims {t.added} points, expected {len(grid)}")
        expected_points.extend(grid)
        k_seen = max(k_seen, len(grid) // 2 - 1)

        horizontal = rects[e].y_hi - rects[e].y_lo <= rects[e].x_hi - rects[e].x_lo
        half = len(grid) // 2
        line_positions = [p.x for p in grid[:half]] if horizontal else [p.y for p in grid[:half]]

        def contains_grid_point(i: int) -> bool:
            # rank prechecks, then bisect over the sorted grid positions
            if horizontal:
                if not (ylo[i] <= ylo[e] <= yhi[i] or ylo[i] <= yhi[e] <= yhi[i]):
                    return False
                if xhi[i] < xlo[e] or xlo[i] > xhi[e]:
                    return False
                lo = max(rects[i].x_lo, rects[e].x_lo)
                hi = min(rects[i].x_hi, rects[e].x_hi)
            else:
                if not (xlo[i] <= xlo[e] <= xhi[i] or xlo[i] <= xhi[e] <= xhi[i]):
                    return False
                if yhi[i] < ylo[e] or ylo[i] > yhi[e]:
                    return False
                lo = max(rects[i].y_lo, rects[e].y_lo)
                hi = min(rects[i].y_hi, rects[e].y_hi)
            at = bisect_left(line_positions, lo)
            return at < len(line_positions) and line_positions[at] <= hi

        pierced = [i for i in remaining if contains_grid_point(i)]
        neighborhood = [
            i
            for i in remaining
            if not (
                xhi[i] < xlo[e] or xlo[i] > xhi[e] or yhi[i] < ylo[e] or ylo[i] > yhi[e]
            )
        ]
        if claim1.passed and pierced != neighborhood:
            claim1 = Check(
                "claim1_equality",
                False,
                f"step {t.step}: pierced {pierced} but neighborhood {neighborhood}",
            )
        if sorted(t.removed) != pierced:
            return fail(f"step {t.step} removed {sorted(t.removed)}, expected {pierced}")
        pierced_set = set(pierced)
        remaining = [i for i in remaining if i not in pierced_set]

    if remaining:
        return fail(f"trace ends with rects {remaining} alive")
    if tuple(expected_points) != res.transversal:
        return fail("transversal differs from the points the trace reconstructs")
    points_check = Check(
        "points_match_trace",
        True,
        f"all {len(expected_points)} points reconstructed exactly",
    )
    k_check = Check(
        "k_per_side",
        res.k_per_side == k_seen,
        f"declared {res.k_per_side}, replay saw {k_seen}",
    )
    return points_check, claim1, k_check


def _completeness(instance: Instance, points: Sequence[Point]) -> Check:
    """Every rect must contain a transversal point; integer ranks, no trace."""
    name = "completeness"
    if not points:
        return Check(name, False, "empty transversal")
    xs = sorted(
        {r.x_lo for r in instance.rects}
        | {r.x_hi for r in instance.rects}
        | {p.x for p in points}
    )
    ys = sorted(
        {r.y_lo for r in instance.rects}
        | {r.y_hi for r in instance.rects}
        | {p.y for p in points}
    )
    xr = {v: i for i, v in enumerate(xs)}
    yr = {v: i for i, v in enumerate(ys)}
    px = np.array([xr[p.x] for p in points], dtype=np.int64)
    py = np.array([yr[p.y] for p in points], dtype=np.int64)
    uncovered = []
    for r in instance.rects:
        inside = (
            (xr[r.x_lo] <= px)
            & (px <= xr[r.x_hi])
            & (yr[r.y_lo] <= py)
            & (py <= yr[r.y_hi])
        )
        if not inside.any():
            uncovered.append(r.id)
    if uncovered:
        return Check(name, False, f"rects without a transversal point: {uncovered}")
    return Check(name, True, f"every rect contains one of the {len(points)} points")


def _certificate_disjoint(instance: Instance, certificate: Sequence[int]) -> Check:
    name = "certificate_disjoint"
    n = instance.n
    bad_ids = [i for i in certificate if not 0 <= i < n]
    if bad_ids:
        return Check(name, False, f"unknown rect ids: {bad_ids}")
    if len(set(certificate)) != len(certificate):
        return Check(name, False, "duplicate ids in certificate")
    rb = rank_bounds(instance.rects)
    xlo = rb.xlo.tolist()
    xhi = rb.xhi.tolist()
    ylo = rb.ylo.tolist()
    yhi = rb.yhi.tolist()
    for pos, a in enumerate(certificate):
        for b in certificate[pos + 1 :]:
            if (
                xlo[a] <= xhi[b]
                and xlo[b] <= xhi[a]
                and ylo[a] <= yhi[b]
                and ylo[b] <= yhi[a]
            ):
                return Check(name, False, f"certificate rects {a} and {b} intersect")
    return Check(name, True, f"{len(certificate)} rects pairwise disjoint")


def _size_bound(instance: Instance, res: PiercingResult) -> Check:
    name = "size_bound"
    if not res.certificate:
        return Check(name, False, "empty certificate")
    if not res.trace:
        return Check(name, False, "empty trace")
    rc = math.ceil(family_ratio(instance))
    t_size = len(res.transversal)
    i_size = len(res.certificate)
    if res.trace[-1].kind == "helly":
        bound = 2 * (rc + 1) * (i_size - 1) + 1
        form = f"2*({rc}+1)*({i_size}-1)+1 = {bound}"
    else:
        bound = 2 * (rc + 1) * i_size
        form = f"2*({rc}+1)*{i_size} = {bound}"
    if t_size > bound:
        return Check(name, False, f"|T| = {t_size} exceeds {form}")
    return Check(name, True, f"|T| = {t_size} <= {form}")


def verify_piercing(
    instance: Instance, res: PiercingResult, instance_id: str = "instance"
) -> VerificationReport:
    """Re-check a piercing result from scratch; see the module docstring."""
    if instance.n == 0:
        raise SchemaError("cannot verify against an empty instance")
    checks = [_trace_consistency(instance, res)]
    points_check, claim1, k_check = _replay(instance, res)
    checks.extend([points_check, claim1, k_check])
    checks.append(_completeness(instance, res.transversal))
    checks.append(_certificate_disjoint(instance, res.certificate))
    checks.append(_size_bound(instance, res))
    ratios = {}
    if res.certificate:
        ratios["tau_alg/nu_cert"] = len(res.transversal) / len(res.certificate)
    return VerificationReport(instance_id, tuple(checks), ratios)


def verify_coloring_bounds(
    instance: Instance, coloring: Coloring, instance_id: str = "instance"
) -> VerificationReport:
    """Re-check properness, contiguity, and the degeneracy color bounds."""
    if instance.n == 0:
        raise SchemaError("cannot verify against an empty instance")
    if len(coloring.colors) != instance.n:
        raise SchemaError(
            f"coloring has {len(coloring.colors)} entries for {instance.n} rects"
        )
    g = build_graph_bruteforce(instance)
    conflict = None
    for u in range(g.n):
        for v in g.adjacency[u]:
            if u < v and coloring.colors[u] == coloring.colors[v]:
                conflict = (u, v)
                break
        if conflict:
            break
    checks = [
        Check(
            "proper",
            conflict is None,
            "no adjacent rects share a color"
            if conflict is None
            else f"rects {conflict[0]} and {conflict[1]} intersect with equal colors",
        )
    ]
    contiguous = set(coloring.colors) == set(range(coloring.num_colors))
    checks.append(
        Check(
            "contiguous",
            contiguous,
            f"colors used: {sorted(set(coloring.colors))}, num_colors {coloring.num_colors}",
        )
    )
    omega, _ = max_depth_omega(instance)
    r = family_ratio(instance)
    rc = math.ceil(r)
    bound = 2 * (rc + 1) * (omega - 1) + 1
    checks.append(
        Check(
            "color_bound",
            coloring.num_colors <= bound,
            f"{coloring.num_colors} colors vs 2*({rc}+1)*({omega}-1)+1 = {bound}",
        )
    )
    if r == 1:
        sq = 4 * omega - 3
        checks.append(
            Check(
                "squares_bound",
                coloring.num_colors <= sq,
                f"{coloring.num_colors} colors vs 4*{omega}-3 = {sq}",
            )
        )
    ratios = {"colors/omega": coloring.num_colors / omega}
    return VerificationReport(instance_id, tuple(checks), ratios)


def batch_stats(
    corpus: Sequence[Instance],
    exact_max_n: int = 10,
    limits: Optional[ExactLimits] = None,
) -> dict:
    """Run the constructions over a corpus and summarize certificate ratios.

    Instances with at most exact_max_n rectangles also get exact tau and nu,
    and any instance with tau_exact > 2*nu_exact - 1 is flagged (none is
    expected to be).
    """
    if not corpus:
        raise SchemaError("batch_stats of an empty corpus")
    lim = limits if limits is not None else ExactLimits()
    rows = []
    for idx, inst in enumerate(corpus):
        res = construct_transversal(inst)
        g = build_graph_bruteforce(inst)
        col = greedy_degeneracy_coloring(g)
        omega, _ = max_depth_omega(inst)
        row: dict = {
            "instance": idx,
            "n": inst.n,
            "tau_alg": len(res.transversal),
            "nu_cert": len(res.certificate),
            "colors": col.num_colors,
            "omega": omega,
            "tau_alg/nu_cert": len(res.transversal) / len(res.certificate),
            "colors/omega": col.num_colors / omega,
        }
        if inst.n <= exact_max_n:
            tau, _ = exact_tau(inst, lim)
            nu, _ = exact_nu(inst, lim)
            row["tau_exact"] = tau
            row["nu_exact"] = nu
            row["tau_exact/nu_exact"] = tau / nu
            row["tau_gt_2nu_minus_1"] = tau > 2 * nu - 1
        rows.append(row)

    def summary(key: str) -> Optional[dict]:
        values = [r[key] for r in rows if key in r]
        if not values:
            return None
        return {
            "max": max(values),
            "mean": sum(values) / len(values),
            "count": len(values),
        }

    aggregate = {
        key: stats
        for key in ("tau_alg/nu_cert", "colors/omega", "tau_exact/nu_exact")
        if (stats := summary(key)) is not None
    }
    aggregate["tau_gt_2nu_minus_1"] = [r["instance"] for r in rows if r.get("tau_gt_2nu_minus_1")]
    return {"rows": rows, "aggregate": aggregate}
