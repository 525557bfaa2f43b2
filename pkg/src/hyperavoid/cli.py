"""Command-line front end.

Subcommands: solve, sample, exact, reduce, decode, count, bench.
Exit codes: 0 success, 2 invalid input, 3 work budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import bench as bench_mod
from . import genfun as genfun_mod
from . import report as report_mod
from .core import dumps_instance, load_graph, load_instance
from .errors import BudgetExceeded, HyperavoidError, InternalInvariantViolation
from .oracle import DEFAULT_BUDGET, NormKind, exact_solve, norm_value
from .reductions import (
    decode_coloring,
    decode_vertex_cover,
    encode_coloring,
    encode_vertex_cover,
)
from .sampler import SamplerConfig, sample_baseline
from .solver import solve, solve_with_state

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3


def _read_source(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _open_output(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _emit(args: argparse.Namespace, payload: dict) -> None:
    fp, owned = _open_output(args.output)
    try:
        if args.format == "csv":
            writer = csv.writer(fp)
            writer.writerow(payload.keys())
            writer.writerow(
                " ".join(str(v) for v in value) if isinstance(value, (list, tuple)) else value
                for value in payload.values()
            )
        else:
            json.dump(payload, fp, indent=2)
            fp.write("\n")
    finally:
        if owned:
            fp.close()


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise HyperavoidError(f"expected a comma-separated integer list, got {text!r}")


def _parse_norm(text: str) -> NormKind:
    if text == "l1":
        return NormKind.l1()
    if text == "linf":
        return NormKind.linf()
    if text.startswith("lp:"):
        spec = text[3:]
        try:
            if "/" in spec:
                num, den = spec.split("/", 1)
                p = Fraction(int(num), int(den))
            else:
                p = Fraction(int(spec))
        except (ValueError, ZeroDivisionError):
            raise HyperavoidError(f"bad lp parameter {spec!r}")
        return NormKind.lp(p)
    raise HyperavoidError(f"unknown norm {text!r} (choose l1, linf, or lp:<num>/<den>)")


def _parse_fixture(text: str) -> genfun_mod.GenFun:
    parts = text.split(":")
    try:
        if parts[0] == "interval" and len(parts) == 2:
            return genfun_mod.fixture_interval(int(parts[1]))
        if parts[0] == "cube" and len(parts) == 2:
            return genfun_mod.fixture_cube(int(parts[1]))
        if parts[0] == "simplex" and len(parts) == 3:
            return genfun_mod.fixture_simplex(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise HyperavoidError(f"bad fixture {text!r}: {exc}")
    raise HyperavoidError(
        f"unknown fixture {text!r} (interval:<N>, cube:<n>, simplex:<n>:<N>)"
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    inst = load_instance(_read_source(args.instance))
    solution, state = solve_with_state(inst)
    _emit(
        args,
        {
            "n": inst.n,
            "m": inst.m,
            "dropped": inst.dropped,
            "norm1": solution.norm1,
            "bound": (inst.m + inst.n) / 2,
            "probes": state.candidate_checks,
            "y": list(solution.y),
        },
    )
    return EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    inst = load_instance(_read_source(args.instance))
    cfg = SamplerConfig(
        num_samples=args.samples, seed=args.seed, radius_override=args.radius
    )
    best = sample_baseline(inst, cfg)
    radius = args.radius if args.radius is not None else (inst.m + inst.n + 1) // 2
    payload = {
        "n": inst.n,
        "m": inst.m,
        "radius": radius,
        "samples": args.samples,
        "found": best is not None,
    }
    if best is not None:
        payload["norm1"] = best.norm1
        payload["y"] = list(best.y)
    _emit(args, payload)
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    inst = load_instance(_read_source(args.instance))
    norm = _parse_norm(args.norm)
    solution = exact_solve(inst, norm, budget=args.budget)
    value = norm_value(solution.y, norm)
    payload = {
        "n": inst.n,
        "m": inst.m,
        "norm": str(norm),
        "norm1": solution.norm1,
        "linf": max((abs(v) for v in solution.y), default=0),
        "value": value if isinstance(value, int) else float(value),
        "y": list(solution.y),
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    graph = load_graph(_read_source(args.graph))
    encode = encode_coloring if args.kind == "coloring" else encode_vertex_cover
    inst = encode(graph)
    fp, owned = _open_output(args.output)
    try:
        fp.write(dumps_instance(inst))
        fp.write("\n")
    finally:
        if owned:
            fp.close()
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    graph = load_graph(_read_source(args.graph))
    if args.x is not None:
        x = _parse_ints(args.x)
    elif args.solution is not None:
        doc = json.loads(_read_source(args.solution))
        x = tuple(int(v) for v in doc["y"])
    else:
        raise HyperavoidError("decode needs --x or --solution")
    if args.kind == "coloring":
        num_colors, coloring = decode_coloring(graph, x)
        _emit(args, {"num_colors": num_colors, "coloring": coloring})
    else:
        cover = decode_vertex_cover(graph, x)
        _emit(args, {"size": len(cover), "cover": sorted(cover)})
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    if args.fixture is not None:
        f = _parse_fixture(args.fixture)
    elif args.genfun is not None:
        f = genfun_mod.load_genfun(_read_source(args.genfun))
    else:
        raise HyperavoidError("count needs --fixture or --genfun")
    c = _parse_ints(args.c) if args.c is not None else None
    if c is None:
        c = solve(genfun_mod.avoidance_set(f)).y
    total = genfun_mod.count_via_genfun(f, c)
    _emit(
        args,
        {"n": f.n, "terms": len(f.terms), "count": total, "c": list(c)},
    )
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = bench_mod.BenchConfig(
        n_values=_parse_ints(args.n_values),
        m_values=_parse_ints(args.m_values),
        entry_bound=args.entry_bound,
        instances_per_cell=args.instances,
        sampler=SamplerConfig(num_samples=args.samples, seed=args.seed),
        seed=args.seed,
    )
    rows = bench_mod.run_bench(cfg)
    note = report_mod.config_note(cfg)
    fp, owned = _open_output(args.output)
    try:
        report_mod.write_csv(rows, fp, note)
    finally:
        if owned:
            fp.close()
    figure_path = args.plot_output
    if figure_path is None and args.output not in (None, "-") and not args.no_plot:
        figure_path = str(Path(args.output).with_suffix(".png"))
    if figure_path is not None and not args.no_plot:
        report_mod.render_figure(rows, figure_path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperavoid",
        description="Small-norm integer vectors avoiding hyperplanes, and exact "
        "lattice-point counts of generating-function fixtures.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=None, help="output path ('-' = stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="run the deterministic solver")
    p.add_argument("instance", help="instance JSON path ('-' = stdin)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sample", parents=[common], help="best-of-N uniform sampling")
    p.add_argument("instance")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--radius", type=int, default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("exact", parents=[common], help="exponential exact optimum")
    p.add_argument("instance")
    p.add_argument("--norm", default="l1", help="l1 | linf | lp:<num>/<den>")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("reduce", parents=[common], help="encode a graph problem")
    p.add_argument("graph", help="graph file path ('-' = stdin)")
    p.add_argument("--kind", choices=("coloring", "vertex-cover"), required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("decode", parents=[common], help="decode a solution vector")
    p.add_argument("graph")
    p.add_argument("--kind", choices=("coloring", "vertex-cover"), required=True)
    p.add_argument("--x", default=None, help="comma-separated vector")
    p.add_argument("--solution", default=None, help='JSON file with a "y" array')
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("count", parents=[common], help="count lattice points")
    p.add_argument("--fixture", default=None, help="interval:<N> | cube:<n> | simplex:<n>:<N>")
    p.add_argument("--genfun", default=None, help="generating-function JSON path")
    p.add_argument("--c", default=None, help="comma-separated substitution direction")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bench", parents=[common], help="solver vs sampler benchmark")
    p.add_argument("--n-values", required=True, help="comma-separated dimensions")
    p.add_argument("--m-values", required=True, help="comma-separated constraint counts")
    p.add_argument("--entry-bound", type=int, default=10)
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--no-plot", action="store_true", help="skip the figure")
    p.add_argument("--plot-output", default=None, help="explicit figure path")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalInvariantViolation:
        raise
    except (HyperavoidError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
