import json
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from rectpierce import intersects, kernels
from rectpierce import _kernels_py
from rectpierce.kernels import rank_bounds, rank_values

from helpers import random_instance

try:
    from rectpierce import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [("python", _kernels_py)] + (
    [("compiled", _kernels_c)] if _kernels_c is not None else []
)


def test_backend_name_is_known():
    assert kernels.BACKEND in ("python", "compiled")


class TestRankValues:
    def test_dedup_and_order(self):
        vals = [Fraction(3), Fraction(1, 2), Fraction(3), Fraction(2)]
        sorted_vals, index = rank_values(vals)
        assert sorted_vals == [Fraction(1, 2), Fraction(2), Fraction(3)]
        assert index[Fraction(3)] == 2

    def test_order_isomorphism(self):
        inst = random_instance(60, r=2, seed=5)
        rb = rank_bounds(inst.rects)
        for i in range(0, 60, 7):
            for j in range(0, 60, 11):
                a, b = inst.rects[i], inst.rects[j]
                assert (a.x_lo <= b.x_hi) == (rb.xlo[i] <= rb.xhi[j])
                assert (a.y_lo <= b.y_hi) == (rb.ylo[i] <= rb.yhi[j])

    def test_rank_lookup_round_trip(self):
        inst = random_instance(40, r=3, seed=8)
        rb = rank_bounds(inst.rects)
        for i, r in enumerate(inst.rects):
            assert rb.xs[rb.xlo[i]] == r.x_lo
            assert rb.xs[rb.xhi[i]] == r.x_hi
            assert rb.ys[rb.ylo[i]] == r.y_lo
            assert rb.ys[rb.yhi[i]] == r.y_hi


@pytest.mark.parametrize("name,mod", BACKENDS)
class TestBrutePairs:
    def test_matches_naive_fraction_loop(self, name, mod):
        inst = random_instance(80, r=Fraction(5, 2), seed=21)
        rb = rank_bounds(inst.rects)
        ia, ja = mod.brute_pairs(rb.xlo, rb.xhi, rb.ylo, rb.yhi)
        got = set(zip(ia.tolist(), ja.tolist()))
        want = {
            (i, j)
            for i in range(80)
            for j in range(i + 1, 80)
            if intersects(inst.rects[i], inst.rects[j])
        }
        assert got == want

    def test_empty_when_disjoint(self, name, mod):
        xlo = np.array([0, 2], dtype=np.int64)
        xhi = np.array([1, 3], dtype=np.int64)
        ylo = np.array([0, 0], dtype=np.int64)
        yhi = np.array([1, 1], dtype=np.int64)
        ia, ja = mod.brute_pairs(xlo, xhi, ylo, yhi)
        assert len(ia) == 0 and len(ja) == 0


@pytest.mark.skipif(_kernels_c is None, reason="compiled backend unavailable")
class TestBackendEquivalence:
    def test_brute_pairs_agree(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            n = int(rng.integers(1, 120))
            xlo = rng.integers(0, 40, size=n, dtype=np.int64)
            ylo = rng.integers(0, 40, size=n, dtype=np.int64)
            xhi = xlo + rng.integers(1, 20, size=n, dtype=np.int64)
            yhi = ylo + rng.integers(1, 20, size=n, dtype=np.int64)
            pi, pj = _kernels_py.brute_pairs(xlo, xhi, ylo, yhi)
            ci, cj = _kernels_c.brute_pairs(xlo, xhi, ylo, yhi)
            assert np.array_equal(pi, ci)
            assert np.array_equal(pj, cj)

    def test_grid_max_depth_agree(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 80))
            m = int(rng.integers(1, 30))
            xlo = rng.integers(0, 50, size=n, dtype=np.int64)
            xhi = xlo + rng.integers(1, 25, size=n, dtype=np.int64)
            cand_x = np.unique(xlo)
            y_lo_idx = rng.integers(0, m, size=n, dtype=np.int64)
            y_hi_idx = y_lo_idx + rng.integers(
                0, m, size=n, dtype=np.int64
            ).clip(max=m - 1 - y_lo_idx)
            assert _kernels_py.grid_max_depth(
                xlo, xhi, cand_x, y_lo_idx, y_hi_idx, m
            ) == _kernels_c.grid_max_depth(xlo, xhi, cand_x, y_lo_idx, y_hi_idx, m)


def test_pure_python_env_var_selects_fallback(tmp_path):
    env = dict(os.environ, RECTPIERCE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from rectpierce import kernels; print(kernels.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "python"


def test_backends_produce_identical_piercing(tmp_path):
    inst_path = tmp_path / "inst.json"
    script = (
        "import sys, json\n"
        "from rectpierce import parse_instance, construct_transversal, serialize_piercing\n"
        "inst = parse_instance(open(sys.argv[1]).read())\n"
        "sys.stdout.write(serialize_piercing(construct_transversal(inst)))\n"
    )
    from rectpierce import serialize_instance

    inst_path.write_text(serialize_instance(random_instance(60, r=Fraction(5, 2), seed=33)))
    outs = []
    for env_val in (None, "1"):
        env = dict(os.environ)
        env.pop("RECTPIERCE_PURE_PYTHON", None)
        if env_val is not None:
            env["RECTPIERCE_PURE_PYTHON"] = env_val
        res = subprocess.run(
            [sys.executable, "-c", script, str(inst_path)],
            capture_output=True,
            text=True,
            env=env,
        )
        assert res.returncode == 0, res.stderr
        outs.append(res.stdout)
    assert outs[0] == outs[1]
    json.loads(outs[0])
