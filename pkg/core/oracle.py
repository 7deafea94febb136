"""
Exact small-n solvers for T_S, wex, ex and rex, plus construction verification.

Each solver seeds a lower bound from certified candidate graphs, enumerates
isomorphism classes with at least that many edges, and scans edge-count
buckets from the top; the first bucket holding a feasible graph is the
optimum and every feasible class in it is reported.
"""
from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator, Optional

from config.settings import settings
from core import constructions
from core.canonical import canonical_form
from core.formulas import rex_values, ts_clique_bounds, ts_k3, ts_p3, turan_edges, wex_clique, wex_p3
from core.generation import enumerate_graphs
from core.graph import Graph, complete_multipartite, cycle_graph, empty_graph, is_regular
from core.patterns import PatternGraph, as_pattern
from core.registry import ConstructionSpec, VerifyMode
from core.singular import (
    check_worm,
    find_singular_copy,
    find_worm_coloring,
    has_worm_coloring,
    is_singular_free,
)
from core.subgraphs import contains_copy, copy_vertex_sets
from schemas.constructions import ConstructionReport
from schemas.formulas import BoundKind, FormulaResult, FormulaValue
from schemas.oracle import ExactResult, GenOptions, Problem, SearchStats, VerificationReport
from schemas.patterns import Coloring
from services.exceptions import (
    CostGuardError,
    DomainError,
    InvalidArgumentError,
    SingularTuranError,
    VerificationError,
)
from services.logger import get_logger
from utils.graph6 import parse_graph6, to_graph6
from utils.serialization import graph_payload

logger = get_logger(__name__)


def integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into non-increasing positive parts"""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


# ---- predicates --------------------------------------------------------------


def satisfies(problem: Problem, graph: Graph, pattern: PatternGraph) -> bool:
    if problem == Problem.TS:
        return is_singular_free(graph, pattern)
    if problem == Problem.WEX:
        return has_worm_coloring(graph, pattern)
    if problem == Problem.EX:
        return not contains_copy(graph, pattern.graph)
    return is_regular(graph) is not None and not contains_copy(graph, pattern.graph)


def _evaluate_chunk(task: tuple[Problem, PatternGraph, int, list[tuple[int, ...]]]) -> list[bool]:
    problem, pattern, n, chunk = task
    return [satisfies(problem, Graph.from_rows(n, rows, check=False), pattern) for rows in chunk]


def _guard(problem: Problem, n: int, pattern: PatternGraph) -> None:
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    if pattern.graph.edge_count == 0:
        raise InvalidArgumentError(f"pattern {pattern.name} has no edges; every graph contains it")
    if problem == Problem.WEX and pattern.order < 3:
        raise InvalidArgumentError(f"WORM colorings need |V(F)| >= 3, got {pattern.name}")
    if problem == Problem.TS:
        named = pattern.name in ("K3", "P3")
        limit = settings.TS_MAX_N if named else settings.TS_MAX_N_OTHER
    else:
        limit = {
            Problem.WEX: settings.WEX_MAX_N,
            Problem.EX: settings.EX_MAX_N,
            Problem.REX: settings.REX_MAX_N,
        }[problem]
    if n > limit:
        raise CostGuardError(
            f"exact {problem.value} search is limited to n <= {limit} for {pattern.name}, got {n}",
            advice="use the formulas or a construction for larger n",
        )


# ---- seeding -------------------------------------------------------------------


def _seed_candidates(problem: Problem, n: int, pattern: PatternGraph) -> Iterator[Graph]:
    yield empty_graph(n)
    for parts in integer_partitions(n):
        if len(parts) > 1:
            yield complete_multipartite(parts)
    builders: list[Callable[[], Graph]] = []
    if problem == Problem.TS and pattern.name == "K3":
        builders.append(lambda: constructions.caro_tuza_k3(n))
    if pattern.name == "P3":
        builders.append(lambda: constructions.p3_extremal(n))
        builders.append(lambda: constructions.p3_wex_graph(n).graph)
    if problem == Problem.REX:
        builders.append(lambda: cycle_graph(n))
        builders.append(lambda: constructions.regular_odd_girth_graph(n, pattern.odd_girth or 3))
    for build in builders:
        try:
            yield build()
        except (DomainError, InvalidArgumentError):
            continue


def _seed(problem: Problem, n: int, pattern: PatternGraph, stats: SearchStats) -> int:
    best = 0
    for graph in _seed_candidates(problem, n, pattern):
        if graph.edge_count <= best:
            continue
        stats.predicate_calls += 1
        if satisfies(problem, graph, pattern):
            best = graph.edge_count
    return best


# ---- formula cross-reference ---------------------------------------------------


def _formula(problem: Problem, n: int, pattern: PatternGraph) -> Optional[FormulaResult]:
    try:
        if problem == Problem.TS and pattern.name == "K3" and n >= 3:
            return ts_k3(n)
        if problem == Problem.TS and pattern.name == "P3" and n >= 3:
            return ts_p3(n)
        if problem == Problem.TS and pattern.is_complete and pattern.r >= 3:
            return ts_clique_bounds(n, pattern.r)
        if problem == Problem.WEX and pattern.name == "P3" and n >= 3:
            return wex_p3(n)
        if problem == Problem.WEX and pattern.is_complete:
            return wex_clique(n, pattern.r)
        if problem == Problem.EX and pattern.is_complete:
            exact = FormulaValue(value=turan_edges(n, pattern.r), kind=BoundKind.EXACT, source="Turán")
            return FormulaResult(values=[exact])
        if problem == Problem.REX and not pattern.is_bipartite:
            return rex_values(n, pattern)
    except SingularTuranError:
        return None
    return None


def _notes(problem: Problem, n: int, pattern: PatternGraph, value: int) -> list[str]:
    formula = _formula(problem, n, pattern)
    if formula is None or not formula.values:
        return []
    if not formula.contains(value):
        logger.warning(
            "oracle_formula_disagreement",
            problem=problem.value, n=n, pattern=pattern.name, value=value, formula=formula.describe(),
        )
        return [f"value {value} lies outside the closed-form range {formula.describe()}"]
    if formula.exact is not None:
        return [f"agrees with the closed form {formula.exact}"]
    return [f"pins the closed-form interval {formula.describe()} at {value}"]


# ---- search ----------------------------------------------------------------------


def _scan(
    problem: Problem,
    pattern: PatternGraph,
    n: int,
    buckets: dict[int, list[tuple[int, ...]]],
    opts: GenOptions,
    stats: SearchStats,
) -> tuple[int, list[Graph]]:
    pool = ProcessPoolExecutor(max_workers=opts.workers) if opts.workers > 1 else None
    try:
        for edges in sorted(buckets, reverse=True):
            bucket = buckets[edges]
            tasks = [
                (problem, pattern, n, bucket[i:i + opts.chunk_size])
                for i in range(0, len(bucket), opts.chunk_size)
            ]
            verdicts = pool.map(_evaluate_chunk, tasks) if pool else map(_evaluate_chunk, tasks)
            flags = [flag for part in verdicts for flag in part]
            stats.predicate_calls += len(flags)
            winners = [Graph.from_rows(n, rows, check=False) for rows, ok in zip(bucket, flags) if ok]
            logger.debug("oracle_bucket_scanned", edges=edges, size=len(bucket), feasible=len(winners))
            if winners:
                stats.pruned = sum(len(b) for e, b in buckets.items() if e < edges)
                return edges, winners
    finally:
        if pool is not None:
            pool.shutdown()
    return -1, []


def exact_solve(problem: Problem, n: int, pattern, opts: Optional[GenOptions] = None) -> ExactResult:
    """Certified optimum of `problem` on n vertices with every extremal class"""
    problem = Problem(problem)
    f = as_pattern(pattern)
    _guard(problem, n, f)
    opts = opts or GenOptions()
    started = time.perf_counter()
    stats = SearchStats()
    seed = _seed(problem, n, f, stats)
    stats.seed_edges = seed
    logger.info("oracle_search_started", problem=problem.value, n=n, pattern=f.name, seed=seed)

    window = opts.model_copy(update={"min_edges": seed, "max_edges": None, "max_n": n})
    buckets: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for graph in enumerate_graphs(n, window):
        buckets[graph.edge_count].append(graph.rows)
        stats.graphs_examined += 1

    value, winners = _scan(problem, f, n, buckets, opts, stats)
    if value < seed:
        raise VerificationError(
            f"no enumerated class reached the certified seed of {seed} edges "
            f"({problem.value}, n={n}, {f.name})"
        )
    stats.wall_time_seconds = round(time.perf_counter() - started, 6)
    extremal = sorted(to_graph6(canonical_form(g)) for g in winners)
    result = ExactResult(
        problem=problem,
        n=n,
        pattern=f.name,
        value=value,
        extremal=extremal,
        stats=stats,
        notes=_notes(problem, n, f, value),
    )
    logger.info(
        "oracle_search_finished",
        problem=problem.value,
        n=n,
        pattern=f.name,
        value=value,
        classes=len(extremal),
        examined=stats.graphs_examined,
        seconds=stats.wall_time_seconds,
    )
    return result


def exact_ts(n: int, pattern, opts: Optional[GenOptions] = None) -> ExactResult:
    return exact_solve(Problem.TS, n, pattern, opts)


def exact_wex(n: int, pattern, opts: Optional[GenOptions] = None) -> ExactResult:
    return exact_solve(Problem.WEX, n, pattern, opts)


def exact_ex(n: int, pattern, opts: Optional[GenOptions] = None) -> ExactResult:
    return exact_solve(Problem.EX, n, pattern, opts)


def exact_rex(n: int, pattern, opts: Optional[GenOptions] = None) -> ExactResult:
    return exact_solve(Problem.REX, n, pattern, opts)


# ---- verification ------------------------------------------------------------


def verify_construction(
    graph: Graph,
    pattern,
    predicted_edges: Optional[int] = None,
    coloring: Optional[Coloring] = None,
    mode: Optional[VerifyMode] = None,
    expect_regular: bool = False,
) -> VerificationReport:
    """Check a built graph against its predicted edge count and the relevant predicate"""
    f = as_pattern(pattern)
    if mode is None:
        mode = VerifyMode.WORM if coloring is not None else VerifyMode.SINGULAR_FREE
    failures: list[str] = []
    actual = graph.edge_count
    if predicted_edges is not None and predicted_edges != actual:
        failures.append(f"predicted {predicted_edges} edges, built {actual}")

    singular_free: Optional[bool] = None
    worm_valid: Optional[bool] = None
    witness: Optional[dict] = None
    if mode == VerifyMode.SINGULAR_FREE:
        found = find_singular_copy(graph, f)
        singular_free = found is None
        if found is not None:
            witness = found.model_dump(mode="json")
            failures.append(f"singular copy of {f.name} on {list(found.vertices)} ({found.mode.value})")
    elif mode == VerifyMode.WORM:
        if coloring is None:
            raise InvalidArgumentError("WORM verification needs a coloring")
        violation = check_worm(graph, f, coloring)
        worm_valid = violation is None
        if violation is not None:
            witness = violation.model_dump(mode="json")
            failures.append(f"{violation.kind.value.lower()} copy of {f.name} on {list(violation.vertices)}")
    else:
        copies = copy_vertex_sets(graph, f.graph)
        if copies:
            witness = {"vertices": list(copies[0])}
            failures.append(f"contains {f.name} on {list(copies[0])}")

    if expect_regular and is_regular(graph) is None:
        failures.append("graph is not regular")

    counts: dict[int, int] = {}
    for d in graph.degrees():
        counts[d] = counts.get(d, 0) + 1
    report = VerificationReport(
        passed=not failures,
        pattern=f.name,
        predicted_edges=predicted_edges,
        actual_edges=actual,
        singular_free=singular_free,
        worm_valid=worm_valid,
        degrees=sorted(counts),
        degree_counts=dict(sorted(counts.items())),
        witness=witness,
        failures=failures,
    )
    logger.debug("construction_verified", pattern=f.name, passed=report.passed, edges=actual)
    return report


def construction_report(
    spec: ConstructionSpec, params: dict[str, Any], verify: bool = False
) -> ConstructionReport:
    """Build a registered construction and describe it; the predicate runs even without `verify`"""
    resolved = spec.resolve(params)
    built = spec.build(**resolved)
    predicted = spec.predict(**resolved)
    f = as_pattern(spec.pattern(**resolved))
    coloring = built.coloring if spec.verify_mode == VerifyMode.WORM else None

    verification = None
    if verify:
        verification = verify_construction(
            built.graph, f, predicted, coloring=coloring, mode=spec.verify_mode, expect_regular=spec.regular,
        )
    singular_free: Optional[bool] = None
    if spec.verify_mode == VerifyMode.SINGULAR_FREE:
        singular_free = verification.singular_free if verification else is_singular_free(built.graph, f)

    return ConstructionReport(
        name=spec.name,
        params=resolved,
        n=built.graph.n,
        pattern=f.name,
        predicted_edges=predicted,
        actual_edges=built.graph.edge_count,
        singular_free=singular_free,
        degrees=sorted(set(built.graph.degrees())),
        graph6=to_graph6(built.graph),
        graph=graph_payload(built.graph),
        coloring=list(built.coloring.colors) if built.coloring else None,
        verification=verification,
    )


def reverify(result: ExactResult) -> list[VerificationReport]:
    """Re-check every extremal witness of a solver result"""
    f = as_pattern(result.pattern)
    reports = []
    for code in result.extremal:
        graph = parse_graph6(code)
        if result.problem == Problem.TS:
            report = verify_construction(graph, f, result.value, mode=VerifyMode.SINGULAR_FREE)
        elif result.problem == Problem.WEX:
            coloring = find_worm_coloring(graph, f)
            if coloring is None:
                raise VerificationError(f"extremal graph {code} admits no {f.name}-WORM coloring")
            report = verify_construction(graph, f, result.value, coloring=coloring)
        else:
            report = verify_construction(
                graph,
                f,
                result.value,
                mode=VerifyMode.COPY_FREE,
                expect_regular=result.problem == Problem.REX,
            )
        reports.append(report)
    return reports
