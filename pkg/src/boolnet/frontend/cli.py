"""Command-line entry point.

Exit codes: 0 ran cleanly (and, for ``check``, the report is consistent);
1 a check came out inconsistent or a search found a counterexample;
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from ..circuits import enumerate_circuits
from ..core import State, UsageError, evaluate, format_truth_table
from ..dynamics import PROPERTY_P_METHODS, fixed_points, has_property_P, opposition_pairs
from ..jacobian import local_graph
from ..search import DEFAULT_FILTERS, SearchScope, census, hunt_question1
from ..theorems import THEOREM_IDS, check, mirror
from .dot import export_dot
from .io import load_network
from .reports import census_report_to_dict, dumps, hunt_to_dict, theorem_report_to_dict


def _state(F, text: str) -> State:
    x = State.parse(text)
    if x.width != F.n:
        raise UsageError(f"state {text!r} has {x.width} bits, network has n={F.n}")
    return x


def cmd_eval(args) -> int:
    F = load_network(args.file)
    print(evaluate(F, _state(F, args.state)))
    return 0


def cmd_graph(args) -> int:
    F = load_network(args.file)
    G = local_graph(F, _state(F, args.state))
    if args.dot:
        sys.stdout.write(export_dot(G))
    else:
        for j, i, s in G.sorted_arcs():
            print(f"{j} -> {i} {'+' if s > 0 else '-'}")
    return 0


def cmd_circuits(args) -> int:
    F = load_network(args.file)
    for c in enumerate_circuits(local_graph(F, _state(F, args.state))):
        print(c)
    return 0


def cmd_fixed_points(args) -> int:
    for x in fixed_points(load_network(args.file)):
        print(x)
    return 0


def cmd_check(args) -> int:
    F = load_network(args.file)
    report = check(F, args.theorem)
    if args.json:
        sys.stdout.write(dumps(theorem_report_to_dict(report)))
    else:
        print(f"theorem {report.theorem} (n={report.n})")
        print(f"hypothesis: {'holds' if report.hypothesis_holds else 'fails'}")
        print(f"conclusion: {'holds' if report.conclusion_holds else 'fails'}")
        print(f"consistent: {'yes' if report.consistent else 'NO'}")
        for k, v in theorem_report_to_dict(report)["witnesses"].items():
            print(f"  {k}: {v}")
    if not report.consistent:
        print(f"theorem {report.theorem} inconsistent on this network", file=sys.stderr)
        return 1
    return 0


def cmd_property_p(args) -> int:
    F = load_network(args.file)
    verdicts = {m: has_property_P(F, m) for m in PROPERTY_P_METHODS}
    for m, v in verdicts.items():
        print(f"{m}: {'yes' if v else 'no'}")
    return 0


def cmd_oppositions(args) -> int:
    for p in opposition_pairs(load_network(args.file)):
        print(f"i={p.i} {p.x} {p.y}")
    return 0


def cmd_mirror(args) -> int:
    sys.stdout.write(format_truth_table(mirror(load_network(args.file))))
    return 0


def cmd_search(args) -> int:
    filters = tuple(f for f in args.filters.split(",") if f) if args.filters else DEFAULT_FILTERS
    scope = SearchScope(args.n, args.mode, args.samples, args.seed, filters)
    if args.target == "question1":
        found = hunt_question1(scope)
        doc = hunt_to_dict(scope, found)
        summary = ["question1 hunt: " + (f"COUNTEREXAMPLE {' '.join(doc['network'])}" if found else "none found")]
        newsworthy = found is not None
    else:
        report = census(scope, workers=args.workers, prefix_rows=args.shard_prefix, checkpoint=args.checkpoint)
        doc = census_report_to_dict(report)
        summary = [f"census n={scope.n} mode={scope.mode} total={report.total}"]
        summary += [f"  filter {k}: {c}" for k, c in report.filter_counts]
        summary += [f"  {k}: {v}" for k, v in report.counts.items()]
        for tid, t in report.theorems.items():
            summary.append(
                f"  theorem {tid}: hypothesis={t['hypothesis']} conclusion={t['conclusion']} failures={t['failures']}"
            )
        summary.append(f"  question1 counterexamples: {report.counts['question1']}")
        newsworthy = report.failures > 0 or report.counts["question1"] > 0
    if args.output:
        Path(args.output).write_text(dumps(doc))
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        print("\n".join(summary))
    return 1 if newsworthy else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boolnet", description="Local interaction graphs and fixed points of Boolean networks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate F at a state")
    s.add_argument("file")
    s.add_argument("state")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("graph", help="signed local interaction graph at a state")
    s.add_argument("file")
    s.add_argument("state")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("circuits", help="circuits of the local graph at a state")
    s.add_argument("file")
    s.add_argument("state")
    s.set_defaults(func=cmd_circuits)

    s = sub.add_parser("fixed-points")
    s.add_argument("file")
    s.set_defaults(func=cmd_fixed_points)

    s = sub.add_parser("check", help="hypothesis/conclusion check of one theorem")
    s.add_argument("file")
    s.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("property-p", help="out-degree <= 1 property, by all three methods")
    s.add_argument("file")
    s.set_defaults(func=cmd_property_p)

    s = sub.add_parser("oppositions")
    s.add_argument("file")
    s.set_defaults(func=cmd_oppositions)

    s = sub.add_parser("mirror", help="print F with output coordinate n complemented")
    s.add_argument("file")
    s.set_defaults(func=cmd_mirror)

    s = sub.add_parser("search", help="census or question-1 hunt over network space")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--target", choices=("question1", "census"), default="question1")
    s.add_argument("--filters", help="comma-separated filter chain for census")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--shard-prefix", type=int, help="truth-table rows fixed per shard")
    s.add_argument("--checkpoint", help="resumable checkpoint file (exhaustive census)")
    s.add_argument("--json", action="store_true")
    s.add_argument("--output", help="also write the JSON report here")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"boolnet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
