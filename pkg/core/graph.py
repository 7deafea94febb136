"""
Simple undirected graphs stored as bit-row adjacency.

Row v is a Python int whose bit u is set iff u ~ v. Python ints are
unbounded, so the same representation serves the n <= 64 word-sized case
and the larger constructions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from services.exceptions import InvalidArgumentError


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices 0..n-1"""

    __slots__ = ("_n", "_rows", "_degrees")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise InvalidArgumentError(f"vertex count must be non-negative, got {n}")
        if len(rows) != n:
            raise InvalidArgumentError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InvalidArgumentError(f"row {v} references a vertex outside 0..{n - 1}")
            if (row >> v) & 1:
                raise InvalidArgumentError(f"loop at vertex {v}")
            for u in bits(row):
                if not (rows[u] >> v) & 1:
                    raise InvalidArgumentError(f"asymmetric adjacency between {u} and {v}")
        self._n = n
        self._rows = tuple(rows)
        self._degrees = tuple(row.bit_count() for row in self._rows)

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        """Build without validation; callers guarantee symmetry and no loops"""
        g = cls.__new__(cls)
        g._n = n
        g._rows = tuple(rows)
        g._degrees = tuple(row.bit_count() for row in g._rows)
        return g

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int], check: bool = True) -> "Graph":
        """Build from adjacency rows; `check=False` skips the symmetry scan"""
        return cls(n, rows) if check else cls._trusted(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    # ---- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return sum(self._degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        out = []
        for u, row in enumerate(self._rows):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    # ---- functional updates -------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self._n, list(self.edges()) + list(edges))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self._rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, rows)

    def add_vertex(self, neighborhood: int) -> "Graph":
        """Append vertex n joined to the vertex mask `neighborhood`"""
        new = self._n
        rows = [row | (((neighborhood >> v) & 1) << new) for v, row in enumerate(self._rows)]
        rows.append(neighborhood)
        return Graph._trusted(new + 1, rows)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on `vertices`, relabeled by their order in the sequence"""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self._rows[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph._trusted(len(vertices), rows)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph([u for u in range(self._n) if u != v])

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is old vertex order[i]"""
        if sorted(order) != list(range(self._n)):
            raise InvalidArgumentError("relabeling must be a permutation")
        return self.induced_subgraph(order)

    def complement(self) -> "Graph":
        full = (1 << self._n) - 1
        return Graph._trusted(self._n, [(~row & full) & ~(1 << v) for v, row in enumerate(self._rows)])

    # ---- interop -------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self._n, self._n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count})"


@dataclass(frozen=True)
class PartSizes:
    """Part sizes of a complete multipartite graph, kept in ascending order"""

    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]):
        sizes = tuple(int(s) for s in sizes)
        if not sizes:
            raise InvalidArgumentError("at least one part is required")
        if any(s <= 0 for s in sizes):
            raise InvalidArgumentError(f"part sizes must be positive, got {list(sizes)}")
        object.__setattr__(self, "sizes", tuple(sorted(sizes)))

    @classmethod
    def balanced(cls, n: int, q: int) -> "PartSizes":
        """Sizes of the Turán graph T(n, q); empty parts are dropped"""
        if q < 1:
            raise InvalidArgumentError(f"need at least one part, got {q}")
        base, extra = divmod(n, q)
        sizes = [base + 1] * extra + [base] * (q - extra)
        return cls(s for s in sizes if s > 0)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def blocks(self) -> list[range]:
        """Consecutive vertex ranges, one per part"""
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out

    def edge_count(self) -> int:
        return comb(self.n, 2) - sum(comb(s, 2) for s in self.sizes)


# ---- builders ------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with `leaves` leaves; vertex 0 is the centre"""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(parts: PartSizes | Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutive vertex blocks per part"""
    if not isinstance(parts, PartSizes):
        parts = PartSizes(parts)
    n = parts.n
    full = (1 << n) - 1
    rows = [0] * n
    for block in parts.blocks():
        block_mask = mask_of(block)
        for v in block:
            rows[v] = full & ~block_mask
    return Graph._trusted(n, rows)


def complete_bipartite(a: int, b: int) -> Graph:
    if a == 0 or b == 0:
        return empty_graph(a + b)
    return complete_multipartite([a, b])


def turan_graph(n: int, q: int) -> Graph:
    if n == 0:
        return empty_graph(0)
    return complete_multipartite(PartSizes.balanced(n, q))


def circulant_graph(n: int, offsets: Iterable[int]) -> Graph:
    """Vertices 0..n-1 with i ~ i +/- d (mod n) for each offset d"""
    edges = set()
    for d in offsets:
        d %= n
        if d == 0:
            raise InvalidArgumentError("circulant offsets must be non-zero mod n")
        for i in range(n):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    rows, shift = [], 0
    for g in graphs:
        rows.extend(row << shift for row in g.rows)
        shift += g.n
    return Graph._trusted(shift, rows)


def blow_up(graph: Graph, q: int) -> Graph:
    """Replace each vertex by an independent q-set and each edge by K_{q,q}"""
    if q < 1:
        raise InvalidArgumentError(f"blow-up factor must be positive, got {q}")
    edges = []
    for u, v in graph.edges():
        for i in range(q):
            for j in range(q):
                edges.append((u * q + i, v * q + j))
    return Graph.from_edges(graph.n * q, edges)


# ---- degree helpers ------------------------------------------------------


def degree(graph: Graph, v: int) -> int:
    return graph.degree(v)


def degree_sequence(graph: Graph) -> list[int]:
    """Degrees in non-increasing order"""
    return sorted(graph.degrees(), reverse=True)


def is_regular(graph: Graph) -> Optional[int]:
    """The common degree if every vertex has it, otherwise None"""
    degs = set(graph.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def degree_classes(graph: Graph) -> dict[int, int]:
    """Degree value -> mask of vertices with that degree"""
    classes: dict[int, int] = {}
    for v, d in enumerate(graph.degrees()):
        classes[d] = classes.get(d, 0) | (1 << v)
    return classes


def complement_within_partition(graph: Graph, parts: PartSizes | Sequence[int]) -> Graph:
    """Keep only the edges of `graph` that lie inside a single part block"""
    if not isinstance(parts, PartSizes):
        parts = PartSizes(parts)
    if parts.n != graph.n:
        raise InvalidArgumentError(f"parts cover {parts.n} vertices, graph has {graph.n}")
    rows = list(graph.rows)
    for block in parts.blocks():
        block_mask = mask_of(block)
        for v in block:
            rows[v] &= block_mask
    return Graph._trusted(graph.n, rows)

