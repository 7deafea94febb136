#!/usr/bin/env python3
"""
Command-line front door for the singular Turán toolkit.

Usage:
    python -m cli construct caro-tuza-k3 --n 9 --verify
    python -m cli check --graph "D~{" --pattern K3
    python -m cli check --graph-file graphs.g6 --pattern P3
    python -m cli solve --problem ts --n 8 --pattern K3 --workers 4
    python -m cli table --family ts-p3 --n-range 3..9 --with-oracle
    python -m cli generate --n 5

Exit codes:
    0  success, graph is singular-free / coloring is valid
    1  witness found, verification failed or a table row mismatched
    2  input error or refused (cost guard)
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from config.settings import settings
from core.generation import enumerate_graphs
from core.graph import Graph
from core.oracle import construction_report, exact_solve
from core.patterns import PatternGraph, pattern, pattern_from_graph
from core.registry import construction_names, get_construction
from core.singular import check_worm, find_singular_copy
from core.tables import TABLE_FAMILIES, build_table
from schemas.common import ErrorResponse
from schemas.constructions import OutputFormat, RowStatus
from schemas.oracle import GenMode, GenOptions, Problem
from schemas.patterns import Coloring, SingularVerdict, WormVerdict
from services.exceptions import InvalidArgumentError, SingularTuranError
from services.logger import get_logger
from utils.graph6 import parse_graph6, parse_graph6_lines, to_graph6
from utils.serialization import coloring_from_json, to_dot
from utils.tables import render_csv, render_markdown

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_INPUT = 2


def _emit(text: str, output: Optional[str] = None) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _emit_error(exc: SingularTuranError) -> None:
    body = ErrorResponse(error_code=exc.error_code, error_message=exc.message)
    sys.stderr.write(body.model_dump_json() + "\n")


def _resolve_pattern(args: argparse.Namespace) -> PatternGraph:
    if getattr(args, "pattern_g6", None):
        return pattern_from_graph(parse_graph6(args.pattern_g6))
    return pattern(args.pattern)


def parse_n_range(text: str) -> range:
    """'3..9' -> range(3, 10)"""
    low, sep, high = text.partition("..")
    if not sep or not low.strip().isdigit() or not high.strip().isdigit():
        raise InvalidArgumentError(f"--n-range must look like 3..9, got {text!r}")
    a, b = int(low), int(high)
    if a > b:
        raise InvalidArgumentError(f"empty range {text!r}")
    return range(a, b + 1)


# ---- subcommands -------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    spec = get_construction(args.name)
    raw = {k: getattr(args, k, None) for k in ("n", "r", "g", "q", "a", "pattern", "intra", "parts")}
    report = construction_report(spec, raw, verify=args.verify)
    verification = report.verification
    logger.info("construction_requested", name=spec.name, params=report.params, edges=report.actual_edges)

    fmt = OutputFormat(args.format)
    if fmt == OutputFormat.JSON:
        _emit(json.dumps(report.to_document()), args.output)
    else:
        if fmt == OutputFormat.GRAPH6:
            text = report.graph6
        else:
            graph = Graph.from_edges(report.graph.n, report.graph.edges)
            coloring = Coloring(colors=tuple(report.coloring)) if report.coloring else None
            text = to_dot(graph, coloring, spec.name.replace("-", "_"))
        _emit(text, args.output)
        if verification is not None:
            sys.stderr.write(json.dumps(verification.to_document()) + "\n")

    if verification is not None and not verification.passed:
        return EXIT_WITNESS
    return EXIT_OK


def _check_one(graph: Graph, h: PatternGraph, coloring_text: Optional[str]) -> tuple[dict, bool]:
    if coloring_text is not None:
        coloring = coloring_from_json(coloring_text, graph.n)
        violation = check_worm(graph, h, coloring)
        worm = WormVerdict(
            pattern=h.name, ok=violation is None, violation=violation, num_colors=coloring.num_colors
        )
        return worm.to_document(), worm.ok
    witness = find_singular_copy(graph, h)
    verdict = SingularVerdict(pattern=h.name, singular_free=witness is None, witness=witness)
    return verdict.to_document(), verdict.singular_free


def cmd_check(args: argparse.Namespace) -> int:
    """One JSON verdict per graph; exit 1 if any graph has a witness"""
    if args.graph_file:
        graphs = parse_graph6_lines(Path(args.graph_file).read_text(encoding="utf-8"))
    else:
        graphs = [parse_graph6(args.graph)]
    h = _resolve_pattern(args)
    coloring_text = Path(args.coloring).read_text(encoding="utf-8") if args.coloring else None

    all_ok = True
    for graph in graphs:
        doc, ok = _check_one(graph, h, coloring_text)
        _emit(json.dumps(doc))
        all_ok = all_ok and ok
    if len(graphs) > 1:
        logger.info("check_finished", graphs=len(graphs), pattern=h.name, all_ok=all_ok)
    return EXIT_OK if all_ok else EXIT_WITNESS


def cmd_solve(args: argparse.Namespace) -> int:
    h = _resolve_pattern(args)
    opts = GenOptions(workers=args.workers)
    result = exact_solve(Problem(args.problem), args.n, h, opts)
    _emit(json.dumps(result.to_document()))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    ns = parse_n_range(args.n_range)
    rows = build_table(args.family, ns, r=args.r, with_oracle=args.with_oracle, workers=args.workers)
    _emit(render_csv(rows) if args.format == "csv" else render_markdown(rows))
    if any(row.status == RowStatus.MISMATCH for row in rows):
        return EXIT_WITNESS
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    opts = GenOptions(
        mode=GenMode.LABELED if args.labeled else GenMode.ISOMORPH_FREE,
        min_edges=args.min_edges,
        max_edges=args.max_edges,
        workers=args.workers,
    )
    count = 0
    for graph in enumerate_graphs(args.n, opts):
        sys.stdout.write(to_graph6(graph) + "\n")
        count += 1
    logger.info("generation_finished", n=args.n, graphs=count)
    return EXIT_OK


# ---- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singular-turan",
        description="Singular Turán numbers and WORM colorings: constructions, checks, exact search",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Exit codes: 0 success or free, 1 witness or mismatch, 2 input error or refused",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="Build a named construction")
    construct.add_argument("name", choices=construction_names())
    construct.add_argument("--n", type=int, help="Vertex count")
    construct.add_argument("--r", type=int, help="Clique parameter (pattern K_{r+1}) or part count")
    construct.add_argument("--g", type=int, help="Odd girth bound")
    construct.add_argument("--q", type=int, help="Part count of a Turán graph")
    construct.add_argument("--a", type=int, help="|A| for hanson-toft")
    construct.add_argument("--pattern", help="Pattern name for worm-turan, e.g. S3 or P3")
    construct.add_argument("--intra", help="Intra-part graph: cliques:k, regular:d, turan:q or none")
    construct.add_argument("--parts", help="Comma-separated part sizes for complete-multipartite")
    construct.add_argument("--format", choices=[f.value for f in OutputFormat], default="graph6")
    construct.add_argument("--verify", action="store_true", help="Verify edge count and predicate")
    construct.add_argument("--output", help="Write to this file instead of stdout")
    construct.set_defaults(func=cmd_construct)

    check = sub.add_parser("check", help="Look for a singular copy, or check a WORM coloring")
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="graph6 string")
    source.add_argument("--graph-file", help="File with one graph6 string per line")
    check.add_argument("--pattern", default="K3", help="Pattern name (K3, P3, C5, S3, K2,3, ...)")
    check.add_argument("--pattern-g6", help="Arbitrary pattern as graph6")
    check.add_argument("--coloring", help="JSON file with a color id per vertex")
    check.set_defaults(func=cmd_check)

    solve = sub.add_parser("solve", help="Exact small-n optimum by exhaustive search")
    solve.add_argument("--problem", choices=[p.value for p in Problem], required=True)
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--pattern", default="K3")
    solve.add_argument("--pattern-g6", help="Arbitrary pattern as graph6")
    solve.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS)
    solve.set_defaults(func=cmd_solve)

    table = sub.add_parser("table", help="Compare formulas, constructions and the oracle")
    table.add_argument("--family", choices=TABLE_FAMILIES, required=True)
    table.add_argument("--n-range", required=True, help="Inclusive range such as 3..9")
    table.add_argument("--r", type=int, help="r for the clique family")
    table.add_argument("--with-oracle", action="store_true")
    table.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS)
    table.add_argument("--format", choices=["markdown", "csv"], default="markdown")
    table.set_defaults(func=cmd_table)

    generate = sub.add_parser("generate", help="Stream graph6 of every graph on n vertices")
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--labeled", action="store_true", help="All labeled graphs instead of classes")
    generate.add_argument("--min-edges", type=int, default=0)
    generate.add_argument("--max-edges", type=int)
    generate.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS)
    generate.set_defaults(func=cmd_generate)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SingularTuranError as exc:
        logger.warning("command_failed", command=args.command, error_code=exc.error_code)
        _emit_error(exc)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        _emit_error(SingularTuranError(str(exc), "INVALID_INPUT"))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
