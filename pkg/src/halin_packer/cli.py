"""Command-line interface: ``halin-packer <subcommand> ...``.

Exit codes: 0 success/valid/Sat, 3 Unsat or invalid coloring, 4 Unknown,
64 usage or parse error, 65 invalid input graph.
"""

import argparse
import json
import sys

from . import __version__
from .constructive import (
    SCHEDULE_1123,
    SCHEDULE_122222,
    SCHEDULE_1222,
    color_1123,
    color_122222,
    lemma1_tree_coloring,
)
from .errors import HalinPackerError, InvalidColoring, InvalidGraph, InvalidSchedule
from .exact_solver import SearchConfig, decide, survey, write_survey_csv
from .generators import enumerate_cubic_halin, named_instance, random_cubic_halin
from .graph_core import SPacking, verify_packing
from .jsonio import (
    FORMAT_VERSION,
    coloring_from_json,
    coloring_to_json,
    graph_from_json,
    graph_to_json,
    to_dot,
)

EXIT_OK = 0
EXIT_NEGATIVE = 3
EXIT_UNKNOWN = 4
EXIT_USAGE = 64
EXIT_BAD_GRAPH = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_graph(path):
    obj = _read_json(path)
    try:
        return graph_from_json(obj)
    except InvalidGraph:
        raise
    except (TypeError, KeyError, ValueError) as exc:
        raise InvalidGraph(f"malformed graph file {path}: {exc}") from None


def _schedule(text):
    try:
        return SPacking.parse(text)
    except InvalidSchedule as exc:
        raise UsageError(str(exc)) from None


def _config(args):
    kwargs = {}
    if getattr(args, "node_limit", None) is not None:
        kwargs["node_limit"] = args.node_limit
    if getattr(args, "time_limit", None) is not None:
        kwargs["time_limit"] = args.time_limit
    try:
        return SearchConfig(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args, out):
    if args.name:
        h = named_instance(args.name)
    else:
        if args.internal is None:
            raise UsageError("gen needs --internal N (or --name NAME)")
        h = random_cubic_halin(args.internal, args.seed)
    _emit(graph_to_json(h), out)
    return EXIT_OK


def cmd_enum(args, out):
    for h in enumerate_cubic_halin(args.max):
        out.write(json.dumps(graph_to_json(h), separators=(",", ":")) + "\n")
    return EXIT_OK


def cmd_color(args, out):
    h = _load_graph(args.infile)
    if args.schedule == "1123":
        colors, diag = color_1123(h)
        payload = coloring_to_json(h.names, SCHEDULE_1123, colors, diag)
    elif args.schedule == "122222":
        colors, diag = color_122222(h)
        payload = coloring_to_json(h.names, SCHEDULE_122222, colors, diag)
    else:
        colors = lemma1_tree_coloring(h)
        payload = coloring_to_json(h.names, SCHEDULE_1222, colors)
        payload["scope"] = "tree"
    if payload.get("diagnostics", {}).get("fallback_used"):
        print("note: constructive procedure fell back to the exact solver", file=sys.stderr)
    _emit(payload, out)
    return EXIT_OK


def cmd_verify(args, out):
    schedule = _schedule(args.schedule)
    h = _load_graph(args.graph)
    file_schedule, colors = coloring_from_json(_read_json(args.coloring), h.names)
    if file_schedule != schedule:
        print(
            f"note: coloring file declares schedule {file_schedule}, checking {schedule}",
            file=sys.stderr,
        )
    report = verify_packing(h.graph, schedule, colors)
    payload = {"format_version": FORMAT_VERSION, "schedule": list(schedule.s)}
    payload.update(report.to_json())
    for v in payload["violations"]:
        v["u"], v["v"] = h.names[v["u"]], h.names[v["v"]]
    _emit(payload, out)
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_solve(args, out):
    schedule = _schedule(args.schedule)
    h = _load_graph(args.graph)
    result = decide(h.graph, schedule, _config(args))
    payload = {"format_version": FORMAT_VERSION, "schedule": list(schedule.s)}
    payload.update(result.to_json(h.names))
    _emit(payload, out)
    return {"Sat": EXIT_OK, "Unsat": EXIT_NEGATIVE}.get(result.status, EXIT_UNKNOWN)


def cmd_survey(args, out):
    schedules = [_schedule(s) for s in args.schedules.split(",") if s.strip()]
    if not schedules:
        raise UsageError("--schedules must name at least one schedule")
    graphs = enumerate_cubic_halin(args.max)
    rows = survey(graphs, schedules, _config(args), mode=args.mode)
    if args.out == "-":
        write_survey_csv(rows, out, timing=not args.no_timing)
    else:
        with open(args.out, "w", newline="") as fh:
            write_survey_csv(rows, fh, timing=not args.no_timing)
    unknown = sum(r.status == "Unknown" for r in rows)
    negative = sum(r.status in ("Unsat", "Invalid") for r in rows)
    print(f"{len(rows)} rows, {negative} negative, {unknown} unknown", file=sys.stderr)
    return EXIT_UNKNOWN if unknown else EXIT_OK


def cmd_export(args, out):
    h = _load_graph(args.graph)
    if args.format == "json":
        _emit(graph_to_json(h), out)
        return EXIT_OK
    schedule = colors = None
    if args.coloring:
        schedule, colors = coloring_from_json(_read_json(args.coloring), h.names)
        if (colors == 0).any():
            raise InvalidColoring("DOT labels need a total coloring")
    out.write(to_dot(h, schedule, colors))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="halin-packer", description="S-packing colorings of cubic Halin graphs")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("gen", help="random or named cubic Halin graph")
    p.add_argument("--internal", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enum", help="all cubic Halin graphs up to a vertex count")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("color", help="constructive coloring")
    p.add_argument("--schedule", choices=["1123", "122222", "lemma1"], required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against a schedule")
    p.add_argument("--schedule", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact decision by backtracking")
    p.add_argument("--schedule", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("survey", help="batch decide over the enumeration")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--schedules", required=True, help="comma-separated, e.g. 1-1-2-4,1-2-2-2-2")
    p.add_argument("--mode", choices=["exact", "crosscheck"], default="exact")
    p.add_argument("--out", default="-")
    p.add_argument("--no-timing", action="store_true", help="leave elapsed_ms empty")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("export", help="render a graph as DOT or canonical JSON")
    p.add_argument("--format", choices=["dot", "json"], required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv=None, out=None):
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidGraph as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    except (HalinPackerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
