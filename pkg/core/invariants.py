"""Odd girth, clique number and exact chromatic number"""
from __future__ import annotations

from collections import deque
from typing import Optional

from core.graph import Graph, bits
from core.subgraphs import enumerate_cliques


def odd_girth(graph: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, None for bipartite graphs.

    From every root, a BFS layering closes an odd walk of length 2d+1
    along each edge joining two vertices at equal distance d; the minimum
    over all roots is the odd girth.
    """
    best: Optional[int] = None
    rows = graph.rows
    for root in range(graph.n):
        dist = [-1] * graph.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in bits(rows[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                elif dist[w] == dist[u]:
                    length = 2 * dist[u] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_bipartite(graph: Graph) -> bool:
    return odd_girth(graph) is None


def clique_number(graph: Graph) -> int:
    k = 1 if graph.n else 0
    while k < graph.n and next(enumerate_cliques(graph, k + 1), None) is not None:
        k += 1
    return k


def _colorable(graph: Graph, k: int, order: list[int]) -> bool:
    colors = [-1] * graph.n
    rows = graph.rows

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        blocked = {colors[u] for u in bits(rows[v]) if colors[u] >= 0}
        # colors beyond used+1 are interchangeable with color `used`
        for c in range(min(used + 1, k)):
            if c in blocked:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number by backtracking; meant for patterns and small graphs"""
    if graph.n == 0:
        return 0
    if graph.edge_count == 0:
        return 1
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    k = max(2, clique_number(graph))
    while not _colorable(graph, k, order):
        k += 1
    return k
