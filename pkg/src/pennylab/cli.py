"""Command-line interface.

Four subcommands: ``generate`` writes instance point sets, ``verify``
checks one input file, ``color`` runs list coloring on an edge list,
and ``suite`` runs the whole acceptance battery, rendering figures and
a results.csv next to its JSON report.

Exit codes (stable): 0 = all asserted checks pass; 1 = a check failed
or a coloring was not found; 2 = input error (bad file, bad geometry,
bad parameters); 3 = internal invariant violation.

Configuration precedence: command-line flags, then ``PENNYLAB_*``
environment variables, then built-in defaults.  The environment
tunables are ``PENNYLAB_EPSILON`` (tangency tolerance) and
``PENNYLAB_ISOPERIMETRIC_CONSTANT`` (the C in k >= 3.3*sqrt(n) - C).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import formats, report
from .coloring import list_color
from .errors import InputError, InternalInvariantViolation, PennyLabError
from .faces import DEFAULT_ISOPERIMETRIC_CONSTANT
from .generators import InstanceSpec
from .geometry import DEFAULT_EPSILON, normalize
from .version import VERSION

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3

_EPILOG = (
    "exit codes: 0 all asserted checks pass, 1 check failure, "
    "2 input error, 3 internal invariant violation"
)


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"environment variable {name}={raw!r} is not a number")


def _resolve(flag_value, env_name: str, default: float) -> float:
    if flag_value is not None:
        return flag_value
    return _env_float(env_name, default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pennylab",
        description="unit-disk contact graphs: generation, coloring, and "
        "verified structural bounds",
        epilog=_EPILOG,
    )
    parser.add_argument("--version", action="version", version=f"pennylab {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser(
        "generate", help="write an instance as a point-set file", epilog=_EPILOG
    )
    g.add_argument(
        "family",
        choices=["grid", "cycle", "hex", "path", "trimmed-grid", "random-subgrid"],
    )
    g.add_argument("--m", type=int, help="grid side / subgrid side")
    g.add_argument("--h", type=int, help="grid height (defaults to --m)")
    g.add_argument("--len", type=int, dest="length", help="cycle or path length")
    g.add_argument("--rings", type=int, help="hex packing rings")
    g.add_argument("--n", type=int, help="trimmed-grid vertex count")
    g.add_argument("--density", type=float, help="subgrid keep probability")
    g.add_argument("--seed", type=int, default=report.DEFAULT_SEED)
    g.add_argument("--out", help="output file (default: points to stdout)")

    v = sub.add_parser(
        "verify", help="run all applicable checks on an input file", epilog=_EPILOG
    )
    v.add_argument("input", help="point-set file (or edge list with --kind edges)")
    v.add_argument("--kind", choices=["points", "edges"], default="points")
    v.add_argument("--rotation", help="rotation file for edge-list input")
    v.add_argument("--checks", help="comma-separated check ids to keep")
    v.add_argument("--epsilon", type=float, help="tangency tolerance")
    v.add_argument(
        "--isoperimetric-constant",
        type=float,
        help="C in the outer-face lower bound",
    )

    c = sub.add_parser(
        "color", help="list-color an edge-list file from a lists file",
        epilog=_EPILOG,
    )
    c.add_argument("graph", help="edge-list file")
    c.add_argument("lists", help="color-lists file, one line per vertex")

    s = sub.add_parser(
        "suite", help="run the acceptance battery and render outputs",
        epilog=_EPILOG,
    )
    s.add_argument("scale", choices=["small", "full"])
    s.add_argument("--seed", type=int, default=report.DEFAULT_SEED)
    s.add_argument(
        "--isoperimetric-constant",
        type=float,
        help="C in the outer-face lower bound",
    )
    s.add_argument(
        "--out-dir",
        default="pennylab-out",
        help="directory for report.json, results.csv and figures",
    )
    s.add_argument(
        "--no-figures",
        action="store_true",
        help="skip figure/CSV rendering (report JSON only)",
    )
    return parser


def _instance_spec(args) -> InstanceSpec:
    fam = args.family
    if fam == "grid":
        if args.m is None:
            raise InputError("generate grid requires --m")
        params = {"m": args.m}
        if args.h is not None:
            params["h"] = args.h
        return InstanceSpec("grid", params)
    if fam == "cycle":
        if args.length is None:
            raise InputError("generate cycle requires --len")
        return InstanceSpec("cycle", {"n": args.length})
    if fam == "hex":
        if args.rings is None:
            raise InputError("generate hex requires --rings")
        return InstanceSpec("hex", {"r": args.rings})
    if fam == "path":
        if args.length is None:
            raise InputError("generate path requires --len")
        return InstanceSpec("path", {"n": args.length})
    if fam == "trimmed-grid":
        if args.n is None:
            raise InputError("generate trimmed-grid requires --n")
        return InstanceSpec("trimmed_grid", {"n": args.n})
    if args.m is None or args.density is None:
        raise InputError("generate random-subgrid requires --m and --density")
    return InstanceSpec(
        "random_subgrid", {"m": args.m, "density": args.density}, seed=args.seed
    )


def cmd_generate(args) -> int:
    spec = _instance_spec(args)
    cfg = spec.build()
    spec_json = json.dumps(
        {"kind": spec.kind, "params": spec.params, "seed": spec.seed, "n": cfg.n},
        sort_keys=True,
    )
    if args.out:
        formats.write_points(args.out, cfg.points, comment=spec.name)
        print(spec_json)
    else:
        for x, y in cfg.points:
            print(f"{x!r} {y!r}")
        print(spec_json, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    epsilon = _resolve(args.epsilon, "PENNYLAB_EPSILON", DEFAULT_EPSILON)
    iso_c = _resolve(
        args.isoperimetric_constant,
        "PENNYLAB_ISOPERIMETRIC_CONSTANT",
        DEFAULT_ISOPERIMETRIC_CONSTANT,
    )
    check_ids = set(args.checks.split(",")) if args.checks else None
    name = str(args.input)
    if args.kind == "points":
        pts = formats.read_points(args.input)
        cfg = normalize(pts, epsilon=epsilon)
        rep = report.verify_configuration(
            cfg, name=name, isoperimetric_constant=iso_c, check_ids=check_ids
        )
    else:
        g = formats.load_graph(args.input, args.rotation)
        rep = report.verify_graph(g, name=name, check_ids=check_ids)
    print(rep.to_text())
    return EXIT_OK if rep.all_passed() else EXIT_CHECK_FAILED


def cmd_color(args) -> int:
    n, edges = formats.read_edge_list(args.graph)
    from .graphs import PennyGraph

    g = PennyGraph.from_edges(n, edges)
    lists = formats.read_lists(args.lists, n)
    res = list_color(g, lists)
    if res.success:
        for v, c in enumerate(res.colors):
            print(f"{v} {c}")
        if not res.is_proper(g, lists):  # pragma: no cover - verifier guard
            raise InternalInvariantViolation("produced coloring is not proper")
        return EXIT_OK
    print("no coloring found by low-degree removal", file=sys.stderr)
    for v in res.stuck:
        print(
            f"stuck vertex {v}: degree {len(g.adj[v])} among stuck vertices, "
            f"list size {len(lists[v])}",
            file=sys.stderr,
        )
    return EXIT_CHECK_FAILED


def cmd_suite(args) -> int:
    iso_c = _resolve(
        args.isoperimetric_constant,
        "PENNYLAB_ISOPERIMETRIC_CONSTANT",
        DEFAULT_ISOPERIMETRIC_CONSTANT,
    )
    rep = report.run_suite(args.scale, seed=args.seed, isoperimetric_constant=iso_c)
    out_dir = Path(args.out_dir)
    if not args.no_figures:
        from .figures import render_figures

        written = render_figures(out_dir, scale=args.scale)
        out_dir.mkdir(parents=True, exist_ok=True)
        report_path = out_dir / "report.json"
        report_path.write_text(rep.to_text() + "\n", encoding="utf-8")
        written.insert(0, report_path)
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
    print(rep.to_text())
    return EXIT_OK if rep.all_passed() else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": cmd_generate,
        "verify": cmd_verify,
        "color": cmd_color,
        "suite": cmd_suite,
    }
    try:
        return handlers[args.command](args)
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except PennyLabError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
