"""Command-line front end.

Subcommands: split, jsj, witness, check, census, export-dot.  Input is the
edge-list format (or graph6 with --g6) from a file argument or stdin.  Machine
payload goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 2 parse error, 3 empty graph, 4 decomposition
precondition unmet (disconnected or fewer than three vertices), 5 census range
error, 1 internal check failure.
"""

from __future__ import annotations

import argparse
import json
import string
import sys
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .blocks import is_biconnected
from .graphs import (
    GraphError,
    ParseError,
    SimplicialGraph,
    connected_components,
    induced_subgraph,
    parse_graph,
)
from .jsj import build_j0, collapse_to_j, is_reduced, jsj
from .presentations import abelianization, check_coverage, check_euler, emit_presentation
from .serialize import (
    gog_to_dict,
    gog_to_dot,
    graph_to_dot,
    parse_graph6,
    report_to_dict,
    witness_to_dict,
)
from .splitting import (
    NonSplitCover,
    Z_SPLIT_YES,
    ZSplitWitness,
    cover_defects,
    splits_over_z,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_EMPTY = 3
EXIT_PRECONDITION = 4
EXIT_CENSUS_RANGE = 5

CENSUS_MIN_N = 3
CENSUS_MAX_N = 6


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(path: str, g6: bool) -> SimplicialGraph:
    text = _read_text(path)
    if g6:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, got {len(lines)}", 1)
        return parse_graph6(lines[0])
    return parse_graph(text)


def _emit(payload: str) -> None:
    sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj))


def cmd_split(args: argparse.Namespace) -> int:
    g = _load_graph(args.file, args.g6)
    if not g.vertices:
        print("error: empty graph", file=sys.stderr)
        return EXIT_EMPTY
    _emit_json(report_to_dict(splits_over_z(g)))
    return EXIT_OK


def cmd_jsj(args: argparse.Namespace) -> int:
    g = _load_graph(args.file, args.g6)
    try:
        gog = build_j0(g)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.stage == "j":
        gog = collapse_to_j(gog)
    if args.format == "dot":
        _emit(gog_to_dot(gog))
    else:
        _emit_json(gog_to_dict(gog))
    return EXIT_OK


def _verify_amalgam(g: SimplicialGraph, w: ZSplitWitness) -> bool:
    s1, s2 = set(w.side1), set(w.side2)
    allv = set(g.vertices)
    return (
        s1 | s2 == allv
        and s1 & s2 == {w.vertex}
        and s1 != allv
        and s2 != allv
        and bool(s1)
        and bool(s2)
    )


def cmd_witness(args: argparse.Namespace) -> int:
    g = _load_graph(args.file, args.g6)
    if not g.vertices:
        print("error: empty graph", file=sys.stderr)
        return EXIT_EMPTY
    if len(g.vertices) < 3:
        print("error: witnesses are produced for graphs with at least three vertices", file=sys.stderr)
        return EXIT_PRECONDITION
    report = splits_over_z(g)
    witness = report.witness
    if isinstance(witness, ZSplitWitness):
        verified = _verify_amalgam(g, witness)
    elif isinstance(witness, NonSplitCover):
        verified = not cover_defects(g, witness)
    else:
        verified = False
    _emit_json({"z_split": report.z_split, "witness": witness_to_dict(witness), "verified": verified})
    return EXIT_OK if verified else EXIT_CHECK_FAILED


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.file, args.g6)
    try:
        decomposition = jsj(g)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    rank, torsion = abelianization(emit_presentation(decomposition))
    results = [
        ("reduced", is_reduced(decomposition), ""),
        ("euler", check_euler(g, decomposition), ""),
        ("coverage", check_coverage(g, decomposition), ""),
        (
            "abelianization",
            (rank, torsion) == (len(g.vertices), []),
            f" rank={rank} torsion={torsion}",
        ),
    ]
    for name, ok, detail in results:
        _emit(f"{name} {'pass' if ok else 'fail'}{detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_CHECK_FAILED


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.file, args.g6)
    if args.stage == "graph":
        _emit(graph_to_dot(g))
        return EXIT_OK
    try:
        gog = build_j0(g)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.stage == "j":
        gog = collapse_to_j(gog)
    _emit(gog_to_dot(gog))
    return EXIT_OK


def labeled_graphs(n: int, names: Optional[list[str]] = None) -> Iterator[SimplicialGraph]:
    """All 2^(n choose 2) labeled graphs on n vertices, in edge-mask order."""
    if names is None:
        names = list(string.ascii_lowercase[:n]) if n <= 26 else [f"v{i:03d}" for i in range(n)]
    pairs = list(combinations(names, 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield SimplicialGraph(names, edges)


def oracle_biconnected(g: SimplicialGraph) -> bool:
    """Removal-definition biconnectivity, independent of the lowpoint scan."""
    if len(g.vertices) < 2 or len(connected_components(g)) != 1:
        return False
    for v in g.vertices:
        rest = [x for x in g.vertices if x != v]
        if len(rest) >= 1 and len(connected_components(induced_subgraph(g, rest))) > 1:
            return False
    return True


def census_rows(graphs_by_n: dict[int, Iterable[SimplicialGraph]]) -> list[dict]:
    """Count connected/biconnected/splitting graphs and the jsj edge histogram.

    Every connected graph's verdict is cross-checked against the removal
    oracle; a disagreement is an internal error, not a report entry.
    """
    rows = []
    for n in sorted(graphs_by_n):
        connected = biconnected = splits = 0
        histogram: dict[int, int] = {}
        for g in graphs_by_n[n]:
            if len(connected_components(g)) != 1:
                continue
            connected += 1
            oracle = oracle_biconnected(g)
            if n >= 3:
                report = splits_over_z(g)
                z_yes = report.z_split == Z_SPLIT_YES
                if z_yes != (not oracle):
                    raise RuntimeError(
                        f"verdict disagrees with removal oracle on {g!r}"
                    )
                if z_yes:
                    splits += 1
                edge_count = len(jsj(g).edges)
                histogram[edge_count] = histogram.get(edge_count, 0) + 1
            if is_biconnected(g) != oracle:
                raise RuntimeError(f"biconnectivity disagrees with removal oracle on {g!r}")
            if oracle:
                biconnected += 1
        rows.append(
            {
                "n": n,
                "connected": connected,
                "splits_over_Z": splits,
                "biconnected": biconnected,
                "jsj_edge_histogram": {str(k): histogram[k] for k in sorted(histogram)},
            }
        )
    return rows


def cmd_census(args: argparse.Namespace) -> int:
    if args.file is not None:
        text = _read_text(args.file)
        by_n: dict[int, list[SimplicialGraph]] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                g = parse_graph6(line)
            except ParseError as exc:
                print(f"error: graph6 stream line {lineno}: {exc}", file=sys.stderr)
                return EXIT_PARSE
            if g.vertices:
                by_n.setdefault(len(g.vertices), []).append(g)
        _emit_json(census_rows(by_n))
        return EXIT_OK
    if args.n is not None:
        ns = [args.n]
    else:
        ns = list(range(CENSUS_MIN_N, args.max_n + 1))
    if any(n < CENSUS_MIN_N or n > CENSUS_MAX_N for n in ns) or not ns:
        print(
            f"error: census enumerates {CENSUS_MIN_N} <= n <= {CENSUS_MAX_N} vertices",
            file=sys.stderr,
        )
        return EXIT_CENSUS_RANGE
    _emit_json(census_rows({n: labeled_graphs(n) for n in ns}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raag",
        description="Splittings and JSJ decompositions of right-angled Artin groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", nargs="?", default="-", help="edge-list file, or - for stdin")
        p.add_argument("--g6", action="store_true", help="input is a single graph6 line")

    p_split = sub.add_parser("split", help="free and Z-splitting verdicts with witness")
    add_input(p_split)
    p_split.set_defaults(func=cmd_split)

    p_jsj = sub.add_parser("jsj", help="graph-of-groups decomposition")
    add_input(p_jsj)
    p_jsj.add_argument("--stage", choices=("j0", "j"), default="j")
    p_jsj.add_argument("--format", choices=("json", "dot"), default="json")
    p_jsj.set_defaults(func=cmd_jsj)

    p_witness = sub.add_parser("witness", help="emit and re-verify the splitting witness")
    add_input(p_witness)
    p_witness.set_defaults(func=cmd_witness)

    p_check = sub.add_parser("check", help="consistency checks of the decomposition")
    add_input(p_check)
    p_check.set_defaults(func=cmd_check)

    p_census = sub.add_parser("census", help="sweep labeled graphs and tabulate verdicts")
    p_census.add_argument(
        "file", nargs="?", default=None, help="graph6 stream (or -) instead of internal enumeration"
    )
    p_census.add_argument("--n", type=int, default=None, help="single vertex count")
    p_census.add_argument("--max-n", type=int, default=CENSUS_MAX_N, dest="max_n")
    p_census.set_defaults(func=cmd_census)

    p_dot = sub.add_parser("export-dot", help="DOT of the graph or its decomposition")
    add_input(p_dot)
    p_dot.add_argument("--stage", choices=("graph", "j0", "j"), default="graph")
    p_dot.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
