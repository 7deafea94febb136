"""
Canonical labeling by degree refinement plus individualization.

Cells of an ordered partition are refined until equitable, using the
number of neighbours in every cell as the signature. The search then
individualizes vertices of the first smallest non-singleton cell and keeps
the discrete leaf with the largest adjacency code. Automorphisms found
when two leaves share a code prune sibling branches by orbit and allow a
jump back to the point where the equivalent paths diverged.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from core.graph import Graph, mask_of

Cells = list[list[int]]


def refine(rows: tuple[int, ...], cells: Cells) -> Cells:
    """Split cells by neighbour counts until the partition is equitable"""
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = rows[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                refined.append(groups[sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _leaf_code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = rows[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


def _orbit_roots(n: int, generators: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v, w in enumerate(gen):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


@dataclass
class _Search:
    rows: tuple[int, ...]
    n: int
    first_order: list[int] | None = None
    first_path: list[int] = field(default_factory=list)
    first_code: int = -1
    best_order: list[int] | None = None
    best_path: list[int] = field(default_factory=list)
    best_code: int = -1
    generators: list[tuple[int, ...]] = field(default_factory=list)

    def run(self) -> None:
        if self.n == 0:
            self.best_order, self.best_code = [], 0
            return
        self._descend(refine(self.rows, [list(range(self.n))]), [])

    def _automorphism(self, order_a: list[int], order_b: list[int]) -> tuple[int, ...]:
        perm = [0] * self.n
        for x, y in zip(order_a, order_b):
            perm[x] = y
        return tuple(perm)

    def _leaf(self, cells: Cells, path: list[int]) -> int:
        order = [cell[0] for cell in cells]
        code = _leaf_code(self.rows, order)
        depth = len(path)
        if self.first_order is None:
            self.first_order, self.first_path, self.first_code = order, path, code
            self.best_order, self.best_path, self.best_code = order, path, code
            return depth
        if code == self.first_code:
            self.generators.append(self._automorphism(order, self.first_order))
            return _common_prefix(path, self.first_path)
        if code == self.best_code:
            self.generators.append(self._automorphism(order, self.best_order))
            return _common_prefix(path, self.best_path)
        if code > self.best_code:
            self.best_order, self.best_path, self.best_code = order, path, code
        return depth

    def _descend(self, cells: Cells, path: list[int]) -> int:
        if len(cells) == self.n:
            return self._leaf(cells, path)
        depth = len(path)
        target = min(
            (i for i, cell in enumerate(cells) if len(cell) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored:
                fixing = [g for g in self.generators if all(g[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(self.n, fixing)
                    if any(roots[v] == roots[w] for w in explored):
                        continue
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = self._descend(refine(self.rows, child), path + [v])
            explored.append(v)
            if jump < depth:
                return jump
        return depth


def _search(graph: Graph) -> _Search:
    search = _Search(rows=graph.rows, n=graph.n)
    search.run()
    return search


def _encode(n: int, code: int) -> bytes:
    width = (n * (n - 1) // 2 + 7) // 8
    return n.to_bytes(2, "big") + code.to_bytes(width, "big")


def canonical_labeling(graph: Graph) -> tuple[bytes, list[int]]:
    """Return (canonical code, order) where order[i] is the vertex placed at position i"""
    search = _search(graph)
    return _encode(graph.n, search.best_code), list(search.best_order or [])


@lru_cache(maxsize=65536)
def _cached_code(n: int, rows: tuple[int, ...]) -> bytes:
    return _encode(n, _search(Graph.from_rows(n, rows, check=False)).best_code)


def canonical_code(graph: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic"""
    return _cached_code(graph.n, graph.rows)


def canonical_form(graph: Graph) -> Graph:
    """The representative of the isomorphism class, vertex i = canonical position i"""
    _, order = canonical_labeling(graph)
    return graph.relabel(order)


def automorphism_generators(graph: Graph) -> list[tuple[int, ...]]:
    """Automorphisms discovered while canonicalizing; they generate a subgroup of Aut(G)"""
    return list(_search(graph).generators)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a) == canonical_code(b)
