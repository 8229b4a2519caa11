import itertools
import math
from fractions import Fraction

import pytest

from rectpierce import (
    BudgetExceededError,
    ExactLimits,
    Instance,
    InstanceTooLargeError,
    Point,
    SchemaError,
    build_graph_bruteforce,
    candidate_points,
    contains_point,
    exact_chi,
    exact_nu,
    exact_omega_clique,
    exact_tau,
    family_ratio,
    generate_structured,
    intersects,
    max_depth_omega,
    validate_coloring,
)
from rectpierce.exact import _Budget

from helpers import (
    TWO_DISJOINT_SQUARES,
    TWO_OVERLAPPING_SQUARES,
    instance,
    random_instance,
    rect,
    square,
)


class TestCandidatePoints:
    def test_two_disjoint(self):
        assert candidate_points(TWO_DISJOINT_SQUARES) == (Point(0, 0), Point(3, 0))

    def test_two_overlapping(self):
        assert candidate_points(TWO_OVERLAPPING_SQUARES) == (
            Point(0, 0),
            Point(0, 1),
            Point(1, 0),
            Point(1, 1),
        )

    def test_every_candidate_covered(self):
        inst = random_instance(9, r=2, seed=60, window=10, side_max=4)
        for p in candidate_points(inst):
            assert any(contains_point(r, p) for r in inst.rects)

    def test_sorted_lexicographically(self):
        pts = candidate_points(random_instance(9, r=2, seed=61, window=10, side_max=4))
        assert list(pts) == sorted(pts)


def brute_force_tau(inst, cands):
    n = len(inst.rects)
    for size in range(1, n + 1):
        for combo in itertools.combinations(cands, size):
            if all(
                any(contains_point(r, p) for p in combo) for r in inst.rects
            ):
                return size
    return n


def brute_force_nu(inst):
    best = 0
    rs = inst.rects
    for size in range(len(rs), 0, -1):
        for combo in itertools.combinations(range(len(rs)), size):
            if all(
                not intersects(rs[i], rs[j])
                for i, j in itertools.combinations(combo, 2)
            ):
                return size
    return best


def brute_force_chi(g, upper):
    if g.n == 0:
        return 0
    for k in range(1, upper + 1):
        for assign in itertools.product(range(k), repeat=g.n):
            if any(
                assign[u] == assign[v]
                for v in range(g.n)
                for u in g.adjacency[v]
                if u > v
            ):
                continue
            if len(set(assign)) == k:
                return k
    return upper


class TestExactTau:
    def test_single(self):
        tau, pts = exact_tau(instance(square(0, 0, 0)))
        assert tau == 1
        assert pts == (Point(0, 0),)

    def test_two_disjoint(self):
        tau, pts = exact_tau(TWO_DISJOINT_SQUARES)
        assert tau == 2
        assert len(pts) == 2

    def test_two_overlapping(self):
        tau, _ = exact_tau(TWO_OVERLAPPING_SQUARES)
        assert tau == 1

    def test_disjoint_grid(self):
        tau, pts = exact_tau(generate_structured("disjoint_grid", 7))
        assert tau == 7

    def test_clique(self):
        tau, _ = exact_tau(generate_structured("common_point_clique", 9))
        assert tau == 1

    def test_chain(self):
        tau, _ = exact_tau(generate_structured("chain", 3))
        assert tau == 2

    def test_witness_pierces_everything(self):
        inst = random_instance(10, r=2, seed=62, window=10, side_max=4)
        tau, pts = exact_tau(inst)
        assert len(pts) == tau
        for r in inst.rects:
            assert any(contains_point(r, p) for p in pts)

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_subset_enumeration(self, seed):
        inst = random_instance(2 + seed % 4, r=2, seed=900 + seed, window=8, side_max=4)
        tau, _ = exact_tau(inst)
        assert tau == brute_force_tau(inst, candidate_points(inst))

    @pytest.mark.parametrize("seed", range(6))
    def test_custom_candidate_grid_matches_default(self, seed):
        # a finer grid over all corner coordinates cannot do better
        inst = random_instance(2 + seed % 5, r=2, seed=950 + seed, window=8, side_max=4)
        xs = sorted({v for r in inst.rects for v in (r.x_lo, r.x_hi)})
        ys = sorted({v for r in inst.rects for v in (r.y_lo, r.y_hi)})
        finer = tuple(
            Point(x, y)
            for x in xs
            for y in ys
            if any(contains_point(r, Point(x, y)) for r in inst.rects)
        )
        tau_default, _ = exact_tau(inst)
        tau_finer, _ = exact_tau(inst, candidates=finer)
        assert tau_default == tau_finer

    def test_non_covering_candidates_rejected(self):
        from rectpierce import GeometryError

        with pytest.raises(GeometryError):
            exact_tau(TWO_DISJOINT_SQUARES, candidates=(Point(0, 0),))

    def test_size_cap(self):
        with pytest.raises(InstanceTooLargeError):
            exact_tau(random_instance(13, seed=1))

    def test_empty_raises(self):
        with pytest.raises(SchemaError):
            exact_tau(Instance((), None))


class TestExactNu:
    def test_disjoint_grid(self):
        nu, witness = exact_nu(generate_structured("disjoint_grid", 4))
        assert nu == 4
        assert sorted(witness) == [0, 1, 2, 3]

    def test_clique(self):
        nu, witness = exact_nu(generate_structured("common_point_clique", 5))
        assert nu == 1
        assert len(witness) == 1

    def test_chain(self):
        nu, _ = exact_nu(generate_structured("chain", 5))
        assert nu == 3

    def test_witness_disjoint(self):
        inst = random_instance(18, r=2, seed=63, window=15, side_max=5)
        nu, witness = exact_nu(inst)
        assert len(witness) == nu
        for i, j in itertools.combinations(witness, 2):
            assert not intersects(inst.rects[i], inst.rects[j])

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_subset_enumeration(self, seed):
        inst = random_instance(3 + seed % 6, r=2, seed=910 + seed, window=8, side_max=4)
        nu, _ = exact_nu(inst)
        assert nu == brute_force_nu(inst)

    def test_size_cap(self):
        with pytest.raises(InstanceTooLargeError):
            exact_nu(random_instance(25, seed=1))

    def test_empty_raises(self):
        with pytest.raises(SchemaError):
            exact_nu(Instance((), None))


class TestExactOmega:
    def test_clique(self):
        g = build_graph_bruteforce(generate_structured("common_point_clique", 4))
        assert exact_omega_clique(g) == 4

    def test_chain(self):
        g = build_graph_bruteforce(generate_structured("chain", 3))
        assert exact_omega_clique(g) == 2

    def test_edgeless(self):
        g = build_graph_bruteforce(generate_structured("disjoint_grid", 5))
        assert exact_omega_clique(g) == 1

    def test_empty_graph(self):
        from rectpierce.graph import IntersectionGraph

        assert exact_omega_clique(IntersectionGraph(0, ())) == 0

    @pytest.mark.parametrize("seed", range(8))
    def test_agrees_with_max_depth(self, seed):
        inst = random_instance(6 + seed, r=2, seed=920 + seed, window=12, side_max=5)
        g = build_graph_bruteforce(inst)
        depth, _ = max_depth_omega(inst)
        assert exact_omega_clique(g) == depth


class TestExactChi:
    def test_clique(self):
        chi, col = exact_chi(generate_structured("common_point_clique", 4))
        assert chi == 4
        assert col.num_colors == 4

    def test_chain(self):
        chi, col = exact_chi(generate_structured("chain", 5))
        assert chi == 2
        assert col.colors == (0, 1, 0, 1, 0)

    def test_edgeless(self):
        chi, col = exact_chi(generate_structured("disjoint_grid", 6))
        assert chi == 1
        assert col.colors == (0,) * 6

    def test_coloring_is_proper_and_tight(self):
        inst = random_instance(14, r=2, seed=64, window=10, side_max=5)
        chi, col = exact_chi(inst)
        g = build_graph_bruteforce(inst)
        assert validate_coloring(g, col)
        assert col.num_colors == chi

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_assignment_enumeration(self, seed):
        inst = random_instance(3 + seed % 5, r=2, seed=930 + seed, window=8, side_max=4)
        chi, _ = exact_chi(inst)
        g = build_graph_bruteforce(inst)
        assert chi == brute_force_chi(g, chi + 1)

    def test_size_cap(self):
        with pytest.raises(InstanceTooLargeError):
            exact_chi(random_instance(17, seed=1))

    def test_empty_raises(self):
        with pytest.raises(SchemaError):
            exact_chi(Instance((), None))


class TestLimits:
    def test_defaults(self):
        lim = ExactLimits()
        assert (lim.max_n_tau, lim.max_n_nu, lim.max_n_chi) == (12, 24, 16)
        assert lim.time_budget == 60.0

    def test_invalid_cap_rejected(self):
        with pytest.raises(SchemaError):
            ExactLimits(max_n_tau=0)

    def test_invalid_budget_rejected(self):
        with pytest.raises(SchemaError):
            ExactLimits(time_budget=0.0)

    def test_budget_ticks_out(self):
        b = _Budget(1e-9, "probe")
        with pytest.raises(BudgetExceededError):
            for _ in range(100_000):
                b.tick()

    def test_custom_cap_allows_more(self):
        inst = random_instance(14, r=2, seed=65, window=12, side_max=5)
        tau, _ = exact_tau(inst, limits=ExactLimits(max_n_tau=14))
        assert tau >= 1


@pytest.mark.parametrize("seed", range(10))
def test_invariant_chain(seed):
    """nu <= tau and omega <= chi on every instance small enough to solve."""
    r = (1, 2, Fraction(5, 2))[seed % 3]
    inst = random_instance(4 + seed % 7, r=r, seed=940 + seed, window=10, side_max=4)
    tau, _ = exact_tau(inst)
    nu, _ = exact_nu(inst)
    chi, _ = exact_chi(inst)
    omega, _ = max_depth_omega(inst)
    assert nu <= tau
    assert omega <= chi
    rc = math.ceil(family_ratio(inst))
    assert tau <= 2 * (rc + 1) * max(nu - 1, 0) + 1
