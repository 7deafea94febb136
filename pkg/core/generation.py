"""
Exhaustive graph enumeration.

ISOMORPH_FREE mode grows graphs one vertex at a time by canonical
augmentation: a child G = P + v is kept iff deleting the vertex in G's last
canonical position gives a graph isomorphic to P. Every class then has
exactly one accepted parent class, so no global store of seen graphs is
needed. LABELED mode streams all 2^C(n,2) labeled graphs.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Iterable, Iterator, Optional

from config.settings import settings
from core.canonical import canonical_code, canonical_labeling
from core.graph import Graph, empty_graph
from schemas.oracle import GenMode, GenOptions
from services.exceptions import CostGuardError, InvalidArgumentError
from services.logger import get_logger

logger = get_logger(__name__)

Rows = tuple[int, ...]


def _expand(n: int, rows: Rows) -> list[tuple[bytes, Rows]]:
    """Accepted one-vertex extensions of a parent, deduplicated and sorted by code"""
    parent = Graph.from_rows(n, rows, check=False)
    parent_code = canonical_code(parent)
    degrees = parent.degrees()
    children: dict[bytes, Rows] = {}
    for subset in range(1 << n):
        size = subset.bit_count()
        # the new vertex must end up with maximum degree, since the last canonical position holds one
        if any(degrees[v] + ((subset >> v) & 1) > size for v in range(n)):
            continue
        child = parent.add_vertex(subset)
        code, order = canonical_labeling(child)
        if code in children:
            continue
        last = order[-1]
        if last == n or canonical_code(child.delete_vertex(last)) == parent_code:
            children[code] = child.rows
    return sorted(children.items())


def _expand_chunk(task: tuple[int, list[Rows]]) -> list[Rows]:
    n, parents = task
    out: list[Rows] = []
    for rows in parents:
        out.extend(rows for _, rows in _expand(n, rows))
    return out


def _chunks(items: list[Rows], size: int) -> Iterator[list[Rows]]:
    it = iter(items)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _edge_window(target: int, opts: GenOptions):
    """Level filter: can a graph on m vertices still grow into the requested edge window?"""

    def keep(m: int, rows: Rows) -> bool:
        edges = sum(row.bit_count() for row in rows) // 2
        if opts.max_edges is not None and edges > opts.max_edges:
            return False
        growth = sum(range(m, target))
        return edges + growth >= opts.min_edges

    return keep


def _check_guard(n: int, opts: GenOptions) -> None:
    if n < 0:
        raise InvalidArgumentError(f"vertex count must be non-negative, got {n}")
    if opts.mode == GenMode.LABELED:
        if n > settings.LABELED_MAX_N:
            raise CostGuardError(
                f"labeled enumeration of n={n} means 2^{n * (n - 1) // 2} graphs",
                advice=f"use ISOMORPH_FREE mode or n <= {settings.LABELED_MAX_N}",
            )
        return
    limit = min(settings.GENERATOR_MAX_N, opts.max_n)
    if n > limit:
        raise CostGuardError(
            f"isomorph-free enumeration is limited to n <= {limit}, got {n}",
            advice="lower n or raise GENERATOR_MAX_N knowingly",
        )


def _labeled(n: int, opts: GenOptions) -> Iterator[Graph]:
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        if not opts.admits(mask.bit_count()):
            continue
        yield Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))


def _level_up(level: list[Rows], m: int, opts: GenOptions, pool: Optional[ProcessPoolExecutor]) -> list[Rows]:
    tasks = [(m, chunk) for chunk in _chunks(level, opts.chunk_size)]
    results: Iterable[list[Rows]]
    if pool is None:
        results = map(_expand_chunk, tasks)
    else:
        results = pool.map(_expand_chunk, tasks)
    out: list[Rows] = []
    for part in results:
        out.extend(part)
    return out


def _isomorph_free(n: int, opts: GenOptions) -> Iterator[Graph]:
    keep = _edge_window(n, opts)
    level: list[Rows] = [()]
    pool = ProcessPoolExecutor(max_workers=opts.workers) if opts.workers > 1 else None
    try:
        for m in range(n):
            grown = _level_up(level, m, opts, pool)
            level = [rows for rows in grown if keep(m + 1, rows)]
            logger.debug(
                "generation_level_done",
                vertices=m + 1,
                generated=len(grown),
                kept=len(level),
            )
    finally:
        if pool is not None:
            pool.shutdown()
    for rows in level:
        yield Graph.from_rows(n, rows, check=False)


def enumerate_graphs(n: int, opts: Optional[GenOptions] = None) -> Iterator[Graph]:
    """Stream graphs on n vertices whose edge count lies in the options' window.

    ISOMORPH_FREE yields one representative per isomorphism class in a fixed
    order that does not depend on the worker count.
    """
    opts = opts or GenOptions()
    _check_guard(n, opts)
    if opts.mode == GenMode.LABELED:
        return _labeled(n, opts)
    if n == 0:
        return iter([empty_graph(0)] if opts.admits(0) else [])
    return _isomorph_free(n, opts)


def classify_labeled(n: int) -> int:
    """Number of isomorphism classes among all labeled graphs on n vertices"""
    codes = {canonical_code(g) for g in enumerate_graphs(n, GenOptions(mode=GenMode.LABELED))}
    return len(codes)
