"""Command line: ``submanet analyze|reproduce|fixture``.

Exit codes: 0 success, 1 a reproduced claim mismatched, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .claims import SELECTORS, reproduce
from .errors import GraphError
from .report import analyze, format_text
from .submanifolds import FIXTURE_NAMES, generate_network
from .textformat import parse_graph, serialize_graph, to_dot


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="submanet", description="Exact digraph invariants with certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyse a graph file")
    a.add_argument("file", help="graph in the vertex/arc text format ('-' for stdin)")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--strict", action="store_true", help="reject arcs whose endpoints were not declared")

    r = sub.add_parser("reproduce", help="check the stated values of the D1-D6 networks")
    r.add_argument("--fixture", default="ALL", choices=SELECTORS)
    r.add_argument("--json", action="store_true")

    f = sub.add_parser("fixture", help="print a stored network")
    f.add_argument("name")
    f.add_argument("--emit", action="store_true", help="print the graph text format")
    f.add_argument("--dot", action="store_true", help="print Graphviz DOT instead")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "analyze":
            if args.file == "-":
                text = sys.stdin.read()
            else:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            report = analyze(parse_graph(text, auto_declare=not args.strict))
            sys.stdout.write(report.dumps() if args.json else format_text(report))
            return 0
        if args.command == "reproduce":
            result = reproduce(args.fixture)
            if args.json:
                sys.stdout.write(json.dumps(result.to_json(), indent=2) + "\n")
            else:
                sys.stdout.write(result.format_text())
            return result.exit_code
        if args.command == "fixture":
            if args.name not in FIXTURE_NAMES:
                print(f"submanet: unknown fixture {args.name!r}", file=sys.stderr)
                return 2
            D = generate_network(arc_policy=f"FIXTURE({args.name})")
            sys.stdout.write(to_dot(D, args.name) if args.dot else serialize_graph(D))
            return 0
    except (GraphError, OSError) as exc:
        print(f"submanet: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
