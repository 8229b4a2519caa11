"""Command-line interface.

Subcommands: generate, pierce, color, exact, verify, stats, render.
Results go to a file or standard output (``-``); diagnostics go to standard
error. Exit codes: 0 success, 1 usage or input error, 2 verification
failure, 3 exact-oracle size cap or time budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .coloring import greedy_degeneracy_coloring, parse_coloring, serialize_coloring
from .errors import (
    BudgetExceededError,
    GeometryError,
    InstanceTooLargeError,
    SchemaError,
    UsageError,
)
from .exact import ExactLimits, exact_chi, exact_nu, exact_omega_clique, exact_tau
from .graph import build_graph_bruteforce, build_graph_sweep
from .instance import (
    STRUCTURED_KINDS,
    GeneratorConfig,
    generate_random,
    generate_structured,
    parse_instance,
    serialize_instance,
)
from .pierce import construct_transversal, parse_piercing, serialize_piercing
from .render import RenderStyle, render_svg
from .scalar import format_scalar, parse_ratio
from .verify import (
    batch_stats,
    serialize_report,
    verify_coloring_bounds,
    verify_piercing,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; we reserve 2 for failed
    verification, so usage problems are routed through UsageError instead."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")


def _load_instance(path: str):
    return parse_instance(_read(path))


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "random":
        cfg = GeneratorConfig(
            n=args.n,
            r_max=parse_ratio(args.r, "--r"),
            window=parse_ratio(args.window, "--window"),
            side_min=parse_ratio(args.side_min, "--side-min"),
            side_max=parse_ratio(args.side_max, "--side-max"),
            resolution=args.resolution,
            seed=args.seed,
        )
        instance = generate_random(cfg)
    else:
        instance = generate_structured(args.kind, args.n)
    _write(args.out, serialize_instance(instance))
    return 0


def cmd_pierce(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    result = construct_transversal(instance)
    _write(args.out, serialize_piercing(result))
    if args.svg:
        _write(args.svg, render_svg(instance, result))
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    coloring = greedy_degeneracy_coloring(build_graph_sweep(instance))
    _write(args.out, serialize_coloring(coloring))
    if args.svg:
        _write(args.svg, render_svg(instance, coloring))
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    wanted = [w.strip() for w in args.what.split(",") if w.strip()]
    known = ("tau", "nu", "chi", "omega")
    for w in wanted:
        if w not in known:
            raise UsageError(f"--what accepts {','.join(known)}; got {w!r}")
    if not wanted:
        raise UsageError("--what names no oracle")
    kwargs = dict(time_budget=args.budget)
    if args.max_n is not None:
        kwargs.update(max_n_tau=args.max_n, max_n_nu=args.max_n, max_n_chi=args.max_n)
    limits = ExactLimits(**kwargs)

    out: dict = {}
    for w in known:
        if w not in wanted:
            continue
        if w == "tau":
            tau, points = exact_tau(instance, limits)
            out["tau"] = tau
            if args.witness:
                out["tau_points"] = [
                    [format_scalar(p.x), format_scalar(p.y)] for p in points
                ]
        elif w == "nu":
            nu, ids = exact_nu(instance, limits)
            out["nu"] = nu
            if args.witness:
                out["nu_ids"] = list(ids)
        elif w == "chi":
            chi, coloring = exact_chi(instance, limits)
            out["chi"] = chi
            if args.witness:
                out["chi_colors"] = list(coloring.colors)
        else:
            out["omega"] = exact_omega_clique(build_graph_bruteforce(instance), limits)
    _write(args.out, json.dumps(out, indent=2) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    result_text = _read(args.result)
    try:
        doc = json.loads(result_text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"result file: invalid JSON: {exc}") from exc
    if isinstance(doc, dict) and "points" in doc:
        report = verify_piercing(
            instance, parse_piercing(result_text), instance_id=args.instance
        )
    elif isinstance(doc, dict) and "colors" in doc:
        report = verify_coloring_bounds(
            instance, parse_coloring(result_text), instance_id=args.instance
        )
    else:
        raise SchemaError("result file is neither a piercing nor a coloring document")
    _write(args.out, serialize_report(report))
    if not report.ok:
        failed = [c.name for c in report.checks if not c.passed]
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return 2
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    paths: List[str] = []
    for raw in args.inputs:
        p = Path(raw)
        if p.is_dir():
            paths.extend(str(f) for f in sorted(p.glob("*.json")))
        else:
            paths.append(raw)
    if not paths:
        raise UsageError("no instance files found")
    corpus = [parse_instance(_read(p)) for p in paths]
    limits = ExactLimits(time_budget=args.budget)
    stats = batch_stats(corpus, exact_max_n=args.exact_max_n, limits=limits)
    doc = {"files": paths, "rows": stats["rows"], "aggregate": stats["aggregate"]}
    _write(args.out, json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    if args.pierce and args.color:
        raise UsageError("--pierce and --color are mutually exclusive")
    instance = _load_instance(args.instance)
    overlay = None
    if args.pierce:
        overlay = parse_piercing(_read(args.pierce))
    elif args.color:
        overlay = parse_coloring(_read(args.color))
    _write(args.out, render_svg(instance, overlay, RenderStyle(canvas=args.canvas)))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="rectpierce", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated instance")
    g.add_argument("--kind", choices=("random",) + STRUCTURED_KINDS, default="random")
    g.add_argument("--n", type=int, required=True, help="number of rectangles")
    g.add_argument("--r", default="1", help="aspect ratio bound (random kind)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--window", default="100")
    g.add_argument("--side-min", default="1")
    g.add_argument("--side-max", default="10")
    g.add_argument("--resolution", type=int, default=1000)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("pierce", help="construct a transversal with certificate")
    p.add_argument("instance")
    p.add_argument("--out", default="-")
    p.add_argument("--svg", help="also write a figure here")
    p.set_defaults(func=cmd_pierce)

    c = sub.add_parser("color", help="greedy degeneracy coloring")
    c.add_argument("instance")
    c.add_argument("--out", default="-")
    c.add_argument("--svg", help="also write a figure here")
    c.set_defaults(func=cmd_color)

    e = sub.add_parser("exact", help="exact oracles on a small instance")
    e.add_argument("instance")
    e.add_argument("--what", default="tau,nu,chi,omega", help="comma list of tau,nu,chi,omega")
    e.add_argument("--max-n", type=int, help="override every oracle size cap")
    e.add_argument("--budget", type=float, default=60.0, help="time budget in seconds")
    e.add_argument("--witness", action="store_true", help="include witnesses")
    e.add_argument("--out", default="-")
    e.set_defaults(func=cmd_exact)

    v = sub.add_parser("verify", help="re-check a piercing or coloring result")
    v.add_argument("instance")
    v.add_argument("result")
    v.add_argument("--out", default="-")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="certificate ratio summary over instances")
    s.add_argument("inputs", nargs="+", help="instance files or directories")
    s.add_argument("--exact-max-n", type=int, default=10)
    s.add_argument("--budget", type=float, default=60.0)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_stats)

    r = sub.add_parser("render", help="SVG figure of an instance")
    r.add_argument("instance")
    r.add_argument("--pierce", help="piercing result to overlay")
    r.add_argument("--color", help="coloring result to overlay")
    r.add_argument("--canvas", type=int, default=800)
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (InstanceTooLargeError, BudgetExceededError) as exc:
        print(f"oracle limit: {exc}", file=sys.stderr)
        return 3
    except (SchemaError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
