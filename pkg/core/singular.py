"""Singular copies and WORM colorings"""
from __future__ import annotations

from typing import Iterator, Optional, Union

from core.graph import Graph, bits, degree_classes
from core.patterns import PatternGraph, as_pattern
from core.subgraphs import copy_vertex_sets, enumerate_cliques, iter_embeddings
from schemas.patterns import (
    Coloring,
    SingularMode,
    SingularWitness,
    ViolationKind,
    WormViolation,
)
from services.exceptions import InvalidArgumentError
from services.logger import get_logger

logger = get_logger(__name__)

PatternLike = Union[PatternGraph, Graph, str]


def classify_vertex_set(graph: Graph, vertices) -> Optional[SingularMode]:
    """ALL_EQUAL / ALL_DISTINCT when the host degrees line up, otherwise None"""
    degs = [graph.degree(v) for v in vertices]
    distinct = len(set(degs))
    if distinct == 1:
        return SingularMode.ALL_EQUAL
    if distinct == len(degs):
        return SingularMode.ALL_DISTINCT
    return None


def _witness(graph: Graph, vertices: tuple[int, ...], mode: SingularMode) -> SingularWitness:
    vs = tuple(sorted(vertices))
    return SingularWitness(vertices=vs, mode=mode, degrees=tuple(graph.degree(v) for v in vs))


def _split_graph(graph: Graph, key: list[int]) -> tuple[Graph, Graph]:
    """(edges whose endpoints share a key, edges whose endpoints differ)"""
    same, diff = [], []
    for v, row in enumerate(graph.rows):
        s = d = 0
        for u in bits(row):
            if key[u] == key[v]:
                s |= 1 << u
            else:
                d |= 1 << u
        same.append(s)
        diff.append(d)
    return Graph.from_rows(graph.n, same, check=False), Graph.from_rows(graph.n, diff, check=False)


def rainbow_graph(graph: Graph) -> Graph:
    """Edges between vertices of different degree only"""
    return _split_graph(graph, list(graph.degrees()))[1]


def _check_pattern(h: PatternGraph) -> None:
    if h.order < 2:
        raise InvalidArgumentError(f"pattern {h.name} needs at least 2 vertices")


def iter_singular_copies(graph: Graph, pattern: PatternLike) -> Iterator[SingularWitness]:
    """Every vertex set spanning a singular copy, in lexicographic order"""
    h = as_pattern(pattern)
    _check_pattern(h)
    for vertices in copy_vertex_sets(graph, h.graph):
        mode = classify_vertex_set(graph, vertices)
        if mode is not None:
            yield _witness(graph, vertices, mode)


def find_singular_copy(graph: Graph, pattern: PatternLike) -> Optional[SingularWitness]:
    """Lexicographically least singular copy of the pattern, or None"""
    h = as_pattern(pattern)
    _check_pattern(h)
    if not h.is_complete:
        return next(iter_singular_copies(graph, h), None)

    k = h.order
    best: Optional[tuple[tuple[int, ...], SingularMode]] = None
    for mask in degree_classes(graph).values():
        clique = next(enumerate_cliques(graph, k, within=mask), None)
        if clique is not None and (best is None or clique < best[0]):
            best = (clique, SingularMode.ALL_EQUAL)
    clique = next(enumerate_cliques(rainbow_graph(graph), k), None)
    if clique is not None and (best is None or clique < best[0]):
        best = (clique, SingularMode.ALL_DISTINCT)
    return None if best is None else _witness(graph, *best)


def has_singular_copy(graph: Graph, pattern: PatternLike) -> bool:
    """Early-exit test used by the exhaustive searches"""
    h = as_pattern(pattern)
    _check_pattern(h)
    if h.is_complete:
        return find_singular_copy(graph, h) is not None
    degs = graph.degrees()
    size = h.order
    for phi in iter_embeddings(graph, h.graph):
        distinct = len({degs[v] for v in phi})
        if distinct == 1 or distinct == size:
            return True
    return False


def is_singular_free(graph: Graph, pattern: PatternLike) -> bool:
    return not has_singular_copy(graph, pattern)


def degree_coloring(graph: Graph) -> Coloring:
    """Color by degree rank: equal degree iff equal color, smallest degree gets 0"""
    rank = {d: i for i, d in enumerate(sorted(set(graph.degrees())))}
    return Coloring(colors=tuple(rank[d] for d in graph.degrees()))


def split_by_coloring(graph: Graph, coloring: Coloring) -> tuple[Graph, Graph]:
    """(monochromatic edges, bichromatic edges) of a colored graph"""
    _check_coloring(graph, coloring)
    return _split_graph(graph, list(coloring.colors))


def _check_worm_args(graph: Graph, f: PatternGraph, coloring: Optional[Coloring]) -> None:
    if f.order <= 2:
        raise InvalidArgumentError(
            f"WORM colorings need a pattern on at least 3 vertices, got {f.name}"
        )
    if coloring is not None:
        _check_coloring(graph, coloring)


def _check_coloring(graph: Graph, coloring: Coloring) -> None:
    if len(coloring.colors) != graph.n:
        raise InvalidArgumentError(
            f"coloring has {len(coloring.colors)} entries, graph has {graph.n} vertices"
        )


def _violation_kind(colors, vertices) -> Optional[ViolationKind]:
    used = len({colors[v] for v in vertices})
    if used == 1:
        return ViolationKind.MONOCHROMATIC
    if used == len(vertices):
        return ViolationKind.RAINBOW
    return None


def check_worm(graph: Graph, pattern: PatternLike, coloring: Coloring) -> Optional[WormViolation]:
    """None when no copy of F is monochromatic or rainbow, else the least offending copy"""
    f = as_pattern(pattern)
    _check_worm_args(graph, f, coloring)
    colors = coloring.colors

    if f.is_complete:
        k = f.order
        candidates: list[tuple[tuple[int, ...], ViolationKind]] = []
        classes: dict[int, int] = {}
        for v, c in enumerate(colors):
            classes[c] = classes.get(c, 0) | (1 << v)
        for mask in classes.values():
            clique = next(enumerate_cliques(graph, k, within=mask), None)
            if clique is not None:
                candidates.append((clique, ViolationKind.MONOCHROMATIC))
        _, bichromatic = _split_graph(graph, list(colors))
        clique = next(enumerate_cliques(bichromatic, k), None)
        if clique is not None:
            candidates.append((clique, ViolationKind.RAINBOW))
        if not candidates:
            return None
        vertices, kind = min(candidates)
        return WormViolation(kind=kind, vertices=vertices)

    for vertices in copy_vertex_sets(graph, f.graph):
        kind = _violation_kind(colors, vertices)
        if kind is not None:
            return WormViolation(kind=kind, vertices=vertices)
    return None


def find_worm_coloring(
    graph: Graph, pattern: PatternLike, max_colors: Optional[int] = None
) -> Optional[Coloring]:
    """Least restricted-growth WORM coloring using at most `max_colors` colors.

    Vertices are colored in index order; a partial coloring is abandoned as
    soon as a copy of F whose largest vertex was just colored is
    monochromatic or rainbow.
    """
    f = as_pattern(pattern)
    _check_worm_args(graph, f, None)
    n = graph.n
    budget = n if max_colors is None else max_colors
    if n == 0:
        return Coloring(colors=())
    if budget < 1:
        return None

    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    copies = 0
    for vertices in copy_vertex_sets(graph, f.graph):
        closing[max(vertices)].append(vertices)
        copies += 1

    colors = [-1] * n
    nodes = 0

    def assign(v: int, used: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        for c in range(min(used + 1, budget)):
            nodes += 1
            colors[v] = c
            if all(_violation_kind(colors, s) is None for s in closing[v]):
                if assign(v + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    found = assign(0, 0)
    logger.debug("worm_coloring_search", pattern=f.name, n=n, copies=copies, nodes=nodes, found=found)
    if not found:
        return None
    return Coloring(colors=tuple(colors))


def has_worm_coloring(graph: Graph, pattern: PatternLike) -> bool:
    return find_worm_coloring(graph, pattern) is not None
