"""Command-line entry point: ``sproutlab <subcommand> ...``.

Exit codes: 0 success, 1 findings (unexpected mismatches, counterexamples,
violations), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats, lab, verify
from .errors import SproutError
from .graph import make_family
from .solvers import branch_and_bound_search, brute_force_extrema
from .sprout import maturity_weight, sprout, sprout_to_dict, timeline, timeline_counts, to_dot

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2

FORMATS = ("text", "json", "csv", "dot", "edgelist")


class UsageError(SproutError):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def _fmt(args, default, allowed):
    fmt = args.format or default
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} not supported here; choose from {', '.join(allowed)}")
    return fmt


def _pattern(args, g):
    if not args.pattern:
        raise UsageError("--pattern is required")
    return formats.parse_pattern(args.pattern, g.order)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args):
    g = make_family(args.family, *args.params)
    fmt = _fmt(args, "edgelist", ("edgelist", "json"))
    text = formats.format_json_graph(g) if fmt == "json" else formats.format_edge_list(g)
    return EXIT_OK, text


def cmd_sprout(args):
    g = formats.load_graph(args.graph)
    s = sprout(g, _pattern(args, g))
    emit = args.emit or ("json" if args.format == "json" else "dot")
    if emit == "dot":
        return EXIT_OK, to_dot(s, args.t)
    if emit == "json":
        return EXIT_OK, _dump(sprout_to_dict(s, args.t))
    raise UsageError("--emit must be dot or json")


def cmd_timeline(args):
    g = formats.load_graph(args.graph)
    s = sprout(g, _pattern(args, g))
    fmt = _fmt(args, "text", ("text", "json"))
    counts = timeline_counts(s)
    tl = timeline(s)
    if fmt == "json":
        data = {
            "levels": list(tl.levels),
            "counts": [c for _, c in counts],
            "maturity": tl.maturity,
            "mw": maturity_weight(s),
        }
        return EXIT_OK, _dump(data)
    lines = ["level  arcs"] + [f"{t:<5}  {c}" for t, c in counts]
    lines += [f"maturity {tl.maturity}", f"mw {maturity_weight(s)}"]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_solve(args):
    g = formats.load_graph(args.graph)
    fmt = _fmt(args, "text", ("text", "json"))
    want_min = args.objective in ("min", "both")
    want_max = args.objective in ("max", "both")
    record = {"n": g.order, "m": g.size, "method": args.method}
    if args.method == "bnb":
        if want_max:
            raise UsageError("branch and bound only solves --objective min")
        cap = args.cap if args.cap is not None else None
        kwargs = {"force_large": args.force_large}
        if cap is not None:
            kwargs["cap"] = cap
        value, pattern, nodes = branch_and_bound_search(g, **kwargs)
        record.update(min=value, min_pattern=pattern.as_list(), explored=nodes)
    else:
        res = brute_force_extrema(g, args.cap, args.force_large, args.jobs)
        if want_min:
            record.update(min=res.min_value, min_pattern=res.min_pattern.as_list())
        if want_max:
            record.update(max=res.max_value, max_pattern=res.max_pattern.as_list())
        record["explored"] = res.explored
    if fmt == "json":
        return EXIT_OK, _dump(record)
    lines = [f"graph n={g.order} m={g.size}", f"method {args.method}"]
    for key in ("min", "max"):
        if key in record:
            pat = ",".join(map(str, record[f"{key}_pattern"]))
            lines.append(f"{key} {record[key]} @ [{pat}]")
    lines.append(f"explored {record['explored']}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_verify(args):
    fmt = _fmt(args, "text", ("text", "json", "csv"))
    reports = verify.verify_family(
        args.family, args.start, args.stop, args.cap, args.force_large, args.jobs
    )
    allow = verify.load_allowlist(args.allowlist)
    split = verify.classify(reports, allow)
    out = verify.render_reports(reports, fmt)
    if fmt == "text":
        out += (
            f"mismatches: {len(split['expected'])} expected, "
            f"{len(split['unexpected'])} unexpected\n"
        )
        for r in split["stale"]:
            out += f"note: allowlisted {r.family} {r.quantity} {list(r.params)} now matches\n"
    return (EXIT_FINDINGS if split["unexpected"] else EXIT_OK), out


def cmd_hunt(args):
    fmt = _fmt(args, "text", ("text", "json"))
    if args.target == "pattern-conjecture":
        if args.graph:
            g = formats.load_graph(args.graph)
            records = lab.hunt_pattern_conjecture(g, force_large=args.force_large)
            witness = lab.equal_timeline_witness(g, force_large=args.force_large)
            data = {
                "graph": formats.graph_to_dict(g),
                "record_count": len(records),
                "records": [r.to_dict() for r in records],
                "equal_timeline_witness": witness.to_dict() if witness else None,
            }
            found = bool(records)
            summary = f"pattern conjecture on n={g.order} m={g.size}: {len(records)} violating pair(s)"
        elif args.all_connected is not None:
            sweep = lab.hunt_all_connected(args.all_connected, force_large=args.force_large, jobs=args.jobs)
            data = sweep.to_dict()
            found = bool(sweep.records)
            summary = (
                f"pattern conjecture over {sweep.graphs_checked} connected graphs on n={sweep.n}: "
                f"{sweep.violating_graphs} violating graph(s), {len(sweep.records)} record(s), "
                f"{len(sweep.equal_timeline_witnesses)} equal-timeline witness(es)"
            )
            records = sweep.records
        else:
            raise UsageError("hunt pattern-conjecture needs --graph FILE or --all-connected N")
        if fmt == "json":
            return (EXIT_FINDINGS if found else EXIT_OK), _dump(data)
        lines = [summary]
        for r in records:
            d = r.to_dict()
            lines.append(
                f"  edges={d['graph']['edges']} a=[{','.join(map(str, d['pattern_a']))}] "
                f"T_a={d['timeline_a']} mw_a={d['mw_a']}  b=[{','.join(map(str, d['pattern_b']))}] "
                f"T_b={d['timeline_b']} mw_b={d['mw_b']}"
            )
        return (EXIT_FINDINGS if found else EXIT_OK), "\n".join(lines) + "\n"
    if args.target == "zane":
        if args.q is None:
            raise UsageError("hunt zane needs --q Q")
        rep = lab.hunt_zane(args.q, force_large=args.force_large, jobs=args.jobs)
        code = EXIT_OK if rep.holds else EXIT_FINDINGS
        if fmt == "json":
            return code, _dump(rep.to_dict())
        d = rep.to_dict()
        text = (
            f"q={d['q']} graphs={d['graphs_checked']} global_min={d['global_min']} "
            f"attainers={d['attainers']} path_shaped={d['path_shaped']} "
            f"path_shaped_attaining={d['path_shaped_attaining']} holds={d['holds']}\n"
        )
        return code, text
    if args.target == "hamilton-t1":
        if args.n is None:
            raise UsageError("hunt hamilton-t1 needs --n N")
        rep = lab.hunt_hamilton_t1(args.n, force_large=args.force_large, jobs=args.jobs)
        code = EXIT_FINDINGS if rep.violations else EXIT_OK
        if fmt == "json":
            return code, _dump(rep.to_dict())
        text = (
            f"n={rep.n} graphs={rep.graphs_checked} with_hamilton_path={rep.with_hamilton_path} "
            f"violations={len(rep.violations)}\n"
        )
        return code, text
    raise UsageError(f"unknown hunt target {args.target!r}")


def cmd_export(args):
    g = formats.load_graph(args.graph)
    to = args.to or args.format or "edgelist"
    if to == "edgelist":
        return EXIT_OK, formats.format_edge_list(g)
    if to == "json":
        return EXIT_OK, formats.format_json_graph(g)
    if to == "dot":
        return EXIT_OK, to_dot(sprout(g, _pattern(args, g)), args.t)
    raise UsageError("--to must be edgelist, json or dot")


# ---------------------------------------------------------------------------
# parser


def _global_flags(parser, suppress):
    d = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--format", choices=FORMATS, default=d(None), help="output format")
    parser.add_argument("--out", default=d(None), help="write output to this file")
    parser.add_argument("--cap", type=int, default=d(None), help="exhaustive-search order cap")
    parser.add_argument(
        "--force-large", action="store_true", default=d(False), help="allow orders above the cap"
    )
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sproutlab", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    p = sub.add_parser("gen", parents=[common], help="write a family graph")
    p.add_argument("family")
    p.add_argument("params", nargs="+", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sprout", parents=[common], help="sprout a graph under a pattern")
    p.add_argument("graph", help="graph file (edge list or JSON) or family:params")
    p.add_argument("--pattern", required=True)
    p.add_argument("--emit", choices=("dot", "json"))
    p.add_argument("--t", type=int, help="snapshot level")
    p.set_defaults(func=cmd_sprout)

    p = sub.add_parser("timeline", parents=[common], help="timeline levels and arc counts")
    p.add_argument("graph")
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_timeline)

    p = sub.add_parser("solve", parents=[common], help="exact min/max maturity weight")
    p.add_argument("graph")
    p.add_argument("--objective", choices=("min", "max", "both"), default="both")
    p.add_argument("--method", choices=("brute", "bnb"), default="brute")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check family formulas against exact search")
    p.add_argument("family", choices=verify.VERIFY_FAMILIES)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--allowlist", help="expected-mismatch file (default: bundled)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", parents=[common], help="exhaustive conjecture searches")
    p.add_argument("target", choices=("pattern-conjecture", "zane", "hamilton-t1"))
    p.add_argument("--graph")
    p.add_argument("--all-connected", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("export", parents=[common], help="convert a graph or export a sprout DOT")
    p.add_argument("graph")
    p.add_argument("--to", choices=("edgelist", "json", "dot"))
    p.add_argument("--pattern")
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except (SproutError, ValueError) as exc:
        print(f"sproutlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
