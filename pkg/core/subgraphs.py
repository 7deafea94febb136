"""Clique and subgraph-copy enumeration over bit-row adjacency"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

from core.graph import Graph, bits
from services.exceptions import InvalidArgumentError


class Copy(NamedTuple):
    """A non-induced copy of a pattern: image vertex set plus one embedding"""
    vertices: tuple[int, ...]
    embedding: tuple[int, ...]


def _cliques(rows: tuple[int, ...], k: int, cand: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if len(prefix) == k:
        yield tuple(prefix)
        return
    need = k - len(prefix)
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        prefix.append(v)
        yield from _cliques(rows, k, cand & rows[v], prefix)
        prefix.pop()


def enumerate_cliques(graph: Graph, k: int, within: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Every k-clique once, as sorted tuples in lexicographic order.

    `within` restricts the search to a vertex mask.
    """
    if k < 1:
        raise InvalidArgumentError(f"clique size must be positive, got {k}")
    if k > graph.n:
        return iter(())
    cand = (1 << graph.n) - 1 if within is None else within
    return _cliques(graph.rows, k, cand, [])


def is_complete(graph: Graph) -> bool:
    return graph.edge_count == graph.n * (graph.n - 1) // 2


# ---- embeddings ----------------------------------------------------------


@lru_cache(maxsize=256)
def _search_plan(pattern: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Placement order of pattern vertices and, per step, the earlier steps adjacent to it"""
    h = pattern.n
    if h == 0:
        return (), ()
    remaining = set(range(h))
    start = max(remaining, key=lambda v: (pattern.degree(v), -v))
    order = [start]
    remaining.discard(start)
    while remaining:
        placed = set(order)
        nxt = max(
            remaining,
            key=lambda v: (sum(1 for u in pattern.neighbors(v) if u in placed), pattern.degree(v), -v),
        )
        order.append(nxt)
        remaining.discard(nxt)
    position = {v: i for i, v in enumerate(order)}
    back = tuple(
        tuple(sorted(position[u] for u in pattern.neighbors(v) if position[u] < i))
        for i, v in enumerate(order)
    )
    return tuple(order), back


def iter_embeddings(host: Graph, pattern: Graph) -> Iterator[tuple[int, ...]]:
    """Injective homomorphisms pattern -> host, as tuples phi with phi[x] = image of x"""
    h = pattern.n
    if h > host.n:
        return
    order, back = _search_plan(pattern)
    rows = host.rows
    full = (1 << host.n) - 1
    min_degree_mask = {}
    for d in set(pattern.degrees()):
        min_degree_mask[d] = sum(1 << v for v in range(host.n) if host.degree(v) >= d)
    need = [min_degree_mask[pattern.degree(x)] for x in order]
    phi = [0] * h

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == h:
            yield tuple(phi)
            return
        cand = full & ~used & need[i]
        for j in back[i]:
            cand &= rows[phi[order[j]]]
        for v in bits(cand):
            phi[order[i]] = v
            yield from extend(i + 1, used | (1 << v))

    yield from extend(0, 0)


@lru_cache(maxsize=256)
def automorphisms(pattern: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of a (small) pattern graph"""
    return tuple(iter_embeddings(pattern, pattern))


def enumerate_copies(host: Graph, pattern: Graph) -> Iterator[Copy]:
    """Every non-induced copy of `pattern` in `host` exactly once.

    An embedding is emitted only when it is the least tuple among its
    compositions with the automorphisms of the pattern, so each image
    edge set appears once.
    """
    autos = automorphisms(pattern)
    h = pattern.n
    for phi in iter_embeddings(host, pattern):
        if all(phi <= tuple(phi[a[x]] for x in range(h)) for a in autos):
            yield Copy(tuple(sorted(phi)), phi)


def copy_vertex_sets(host: Graph, pattern: Graph, within: Optional[int] = None) -> list[tuple[int, ...]]:
    """Distinct vertex sets spanning at least one copy, sorted lexicographically"""
    if is_complete(pattern):
        return list(enumerate_cliques(host, pattern.n, within)) if pattern.n else []
    seen = set()
    for copy in enumerate_copies(host, pattern):
        if within is None or all((within >> v) & 1 for v in copy.vertices):
            seen.add(copy.vertices)
    return sorted(seen)


def count_copies(host: Graph, pattern: Graph) -> int:
    return sum(1 for _ in enumerate_copies(host, pattern))


def contains_copy(host: Graph, pattern: Graph) -> bool:
    if is_complete(pattern) and pattern.n:
        return next(enumerate_cliques(host, pattern.n), None) is not None
    return next(iter_embeddings(host, pattern), None) is not None
