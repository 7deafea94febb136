"""Pattern graphs H/F with cached invariants, and the name registry (K3, P3, C5, S3, K2,3, ...)"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from core.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from core.invariants import chromatic_number, odd_girth
from core.subgraphs import automorphisms
from services.exceptions import InvalidArgumentError, NotFoundError

_NAME = re.compile(r"^(?:(K)(\d+)(?:,(\d+))?|(P)(\d+)|(C)(\d+)|(S)(\d+))$", re.IGNORECASE)
_G6_PREFIX = "g6:"


@dataclass(frozen=True)
class PatternGraph:
    """A small graph used as the forbidden pattern H or F"""

    name: str
    graph: Graph

    @property
    def order(self) -> int:
        """|V(H)|, written r+1 in the clique and WORM results"""
        return self.graph.n

    @property
    def r(self) -> int:
        return self.graph.n - 1

    @cached_property
    def chromatic_number(self) -> int:
        return chromatic_number(self.graph)

    @property
    def p(self) -> int:
        """chi(F) - 1"""
        return self.chromatic_number - 1

    @cached_property
    def odd_girth(self) -> Optional[int]:
        return odd_girth(self.graph)

    @cached_property
    def automorphism_count(self) -> int:
        return len(automorphisms(self.graph))

    @property
    def is_bipartite(self) -> bool:
        return self.odd_girth is None

    @property
    def is_complete(self) -> bool:
        n = self.graph.n
        return self.graph.edge_count == n * (n - 1) // 2

    @property
    def is_tree(self) -> bool:
        if self.graph.n == 0 or self.graph.edge_count != self.graph.n - 1:
            return False
        seen, stack = {0}, [0]
        while stack:
            for w in self.graph.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.graph.n

    def __str__(self) -> str:
        return self.name


def pattern(name: str) -> PatternGraph:
    """Look up a named pattern.

    Names: Kk (complete), Ka,b (complete bipartite), Pk (path on k vertices),
    Ck (cycle), Sk (star with k leaves), and g6:<graph6> for any graph.
    """
    if name.strip().lower().startswith(_G6_PREFIX):
        from utils.graph6 import parse_graph6

        return pattern_from_graph(parse_graph6(name.strip()[len(_G6_PREFIX):]))
    m = _NAME.match(name.strip())
    if not m:
        raise NotFoundError("pattern", name)
    if m.group(1):
        a = int(m.group(2))
        if m.group(3) is not None:
            b = int(m.group(3))
            if a < 1 or b < 1:
                raise InvalidArgumentError(f"bipartite sides must be positive: {name}")
            return PatternGraph(f"K{a},{b}", complete_bipartite(a, b))
        if a < 1:
            raise InvalidArgumentError(f"clique order must be positive: {name}")
        return PatternGraph(f"K{a}", complete_graph(a))
    if m.group(4):
        k = int(m.group(5))
        if k < 1:
            raise InvalidArgumentError(f"path order must be positive: {name}")
        return PatternGraph(f"P{k}", path_graph(k))
    if m.group(6):
        return PatternGraph(f"C{int(m.group(7))}", cycle_graph(int(m.group(7))))
    k = int(m.group(9))
    if k < 1:
        raise InvalidArgumentError(f"a star needs at least one leaf: {name}")
    return PatternGraph(f"S{k}", star_graph(k))


def pattern_from_graph(graph: Graph, name: Optional[str] = None) -> PatternGraph:
    if name is None:
        from utils.graph6 import to_graph6

        name = f"{_G6_PREFIX}{to_graph6(graph)}"
    return PatternGraph(name, graph)


def as_pattern(value: Union[PatternGraph, Graph, str]) -> PatternGraph:
    if isinstance(value, PatternGraph):
        return value
    if isinstance(value, Graph):
        return pattern_from_graph(value)
    return pattern(value)


def clique_pattern(k: int) -> PatternGraph:
    return PatternGraph(f"K{k}", complete_graph(k))
