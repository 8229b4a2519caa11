"""Compare the compiled kernels against the pure-Python fallback.

Times the two hot kernels on rank arrays taken from generated instances,
at several family sizes. Run from a checkout:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 200,1000,4000 --repeats 5
"""

import argparse
import time
from fractions import Fraction

import numpy as np

from rectpierce import GeneratorConfig, generate_random
from rectpierce import _kernels_py
from rectpierce.kernels import rank_bounds

try:
    from rectpierce import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def depth_inputs(rb):
    cand_x = np.unique(rb.xlo)
    cand_y = np.unique(rb.ylo)
    lookup = {v: i for i, v in enumerate(cand_y.tolist())}
    y_lo_idx = np.array([lookup[v] for v in rb.ylo.tolist()], dtype=np.int64)
    y_hi_idx = np.searchsorted(cand_y, rb.yhi, side="right") - 1
    return cand_x, y_lo_idx, y_hi_idx.astype(np.int64), len(cand_y)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100,500,2000")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels_c is None:
        print("compiled backend not built; timing the pure backend only")

    header = f"{'kernel':<16}{'n':>7}{'python':>12}"
    if _kernels_c is not None:
        header += f"{'compiled':>12}{'speedup':>10}"
    print(header)

    for n in sizes:
        cfg = GeneratorConfig(n=n, r_max=Fraction(5, 2), seed=args.seed)
        rb = rank_bounds(generate_random(cfg).rects)
        cases = [
            (
                "brute_pairs",
                lambda mod: mod.brute_pairs(rb.xlo, rb.xhi, rb.ylo, rb.yhi),
            ),
            (
                "grid_max_depth",
                lambda mod, extra=depth_inputs(rb): mod.grid_max_depth(
                    rb.xlo, rb.xhi, *extra
                ),
            ),
        ]
        for label, call in cases:
            t_py = best_of(lambda: call(_kernels_py), args.repeats)
            line = f"{label:<16}{n:>7}{t_py * 1e3:>10.2f}ms"
            if _kernels_c is not None:
                t_c = best_of(lambda: call(_kernels_c), args.repeats)
                line += f"{t_c * 1e3:>10.2f}ms{t_py / t_c:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
