"""Construction registry: every builder addressable by name with typed parameters"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, NamedTuple, Optional

from core import constructions as c
from core.graph import Graph, PartSizes, complete_multipartite, turan_graph
from core.patterns import as_pattern
from schemas.patterns import Coloring
from services.exceptions import InvalidArgumentError, NotFoundError


class VerifyMode(str, Enum):
    """Which predicate certifies a construction"""
    SINGULAR_FREE = "singular_free"
    WORM = "worm"
    COPY_FREE = "copy_free"


class Built(NamedTuple):
    graph: Graph
    coloring: Optional[Coloring] = None


@dataclass(frozen=True)
class ConstructionSpec:
    name: str
    params: tuple[str, ...]
    build: Callable[..., Built]
    predict: Callable[..., int]
    verify_mode: VerifyMode
    pattern: Callable[..., str]
    description: str
    defaults: dict[str, Any] = field(default_factory=dict)
    regular: bool = False

    def resolve(self, params: dict[str, Any]) -> dict[str, Any]:
        """Keep the parameters this construction takes, fill defaults, reject missing ones"""
        merged = {**self.defaults, **{k: v for k, v in params.items() if v is not None}}
        missing = [p for p in self.params if p not in merged]
        if missing:
            raise InvalidArgumentError(f"{self.name} needs parameter(s): {', '.join(missing)}")
        return {p: merged[p] for p in self.params}


def _parts(value) -> PartSizes:
    if isinstance(value, str):
        try:
            value = [int(s) for s in value.split(",") if s.strip()]
        except ValueError as exc:
            raise InvalidArgumentError(f"parts must be comma-separated integers: {value!r}") from exc
    return PartSizes(value)


def _worm(n: int, pattern: str, intra: str) -> Built:
    graph, coloring = c.worm_turan_graph(n, pattern, c.IntraStrategy.parse(intra))
    return Built(graph, coloring)


def _p3_wex(n: int) -> Built:
    graph, coloring = c.p3_wex_graph(n)
    return Built(graph, coloring)


def _p3_wex_edges(n: int) -> int:
    p, q = n // 2, n - n // 2
    return p * q + p // 2 + q // 2


def _clique(r: int, **_) -> str:
    return f"K{int(r) + 1}"


_SPECS = [
    ConstructionSpec(
        "caro-tuza-k3", ("n",),
        lambda n: Built(c.caro_tuza_k3(n)), c.caro_tuza_k3_edges,
        VerifyMode.SINGULAR_FREE, lambda **_: "K3",
        "complete 4-partite graph, one shape per n mod 4, no singular triangle",
    ),
    ConstructionSpec(
        "property-r", ("n", "r"),
        lambda n, r: Built(c.property_r_graph(n, r)), c.t_prime_edges,
        VerifyMode.SINGULAR_FREE, _clique,
        "best complete r^2-partite graph with r part sizes used r times each",
    ),
    ConstructionSpec(
        "clique-extension", ("n", "r"),
        lambda n, r: Built(c.clique_extension_graph(n, r)), c.clique_extension_edges,
        VerifyMode.SINGULAR_FREE, _clique,
        "property-R graph plus a clique joined to the r(r-1) smallest parts",
    ),
    ConstructionSpec(
        "matching-removal", ("n", "r"),
        lambda n, r: Built(c.matching_removal_graph(n, r)), c.matching_removal_edges,
        VerifyMode.SINGULAR_FREE, _clique,
        "property-R graph with shrunken odd parts and a perfect matching removed",
    ),
    ConstructionSpec(
        "hanson-toft", ("n", "r", "a"),
        lambda n, r, a: Built(c.hanson_toft_graph(n, r, a)),
        lambda n, r, a: PartSizes.balanced(n, r).edge_count() - n // r + 1,
        VerifyMode.COPY_FREE, _clique,
        "K_{r+1}-free graph that is not r-partite with the most edges",
        defaults={"a": 1},
    ),
    ConstructionSpec(
        "p3-extremal", ("n",),
        lambda n: Built(c.p3_extremal(n)), lambda n: c.p3_extremal_shape(n).edges,
        VerifyMode.SINGULAR_FREE, lambda **_: "P3",
        "complete bipartite graph plus perfect matchings with distinct side degrees",
    ),
    ConstructionSpec(
        "p3-wex", ("n",),
        _p3_wex, _p3_wex_edges,
        VerifyMode.WORM, lambda **_: "P3",
        "balanced complete bipartite graph plus maximal matchings, colored by side",
    ),
    ConstructionSpec(
        "worm-turan", ("n", "pattern", "intra"),
        _worm, lambda n, pattern, intra: c.worm_turan_edges(n, pattern, c.IntraStrategy.parse(intra)),
        VerifyMode.WORM, lambda pattern, **_: as_pattern(pattern).name,
        "balanced (|V(F)|-1)-partite graph with an F-free graph inside each part",
        defaults={"intra": "none"},
    ),
    ConstructionSpec(
        "distinct-parts-turan", ("n", "r"),
        lambda n, r: Built(c.distinct_parts_turan(n, r)),
        lambda n, r: c.distinct_parts_sizes(n, r).edge_count(),
        VerifyMode.COPY_FREE, _clique,
        "complete r-partite graph with pairwise distinct part sizes",
    ),
    ConstructionSpec(
        "regular-odd-girth", ("n", "g"),
        lambda n, g: Built(c.regular_odd_girth_graph(n, g)),
        lambda n, g: c.regular_odd_girth_graph(n, g).edge_count,
        VerifyMode.COPY_FREE, lambda g, **_: f"C{int(g)}",
        "regular graph with odd girth above g",
        regular=True,
    ),
    ConstructionSpec(
        "turan", ("n", "q"),
        lambda n, q: Built(turan_graph(n, q)),
        lambda n, q: PartSizes.balanced(n, q).edge_count(),
        VerifyMode.COPY_FREE, lambda q, **_: f"K{int(q) + 1}",
        "balanced complete q-partite graph T(n, q)",
    ),
    ConstructionSpec(
        "complete-multipartite", ("parts",),
        lambda parts: Built(complete_multipartite(_parts(parts))),
        lambda parts: _parts(parts).edge_count(),
        VerifyMode.COPY_FREE, lambda parts: f"K{len(_parts(parts)) + 1}",
        "complete multipartite graph with the given part sizes",
    ),
]

REGISTRY: dict[str, ConstructionSpec] = {spec.name: spec for spec in _SPECS}


def get_construction(name: str) -> ConstructionSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise NotFoundError("construction", name)


def construction_names() -> list[str]:
    return sorted(REGISTRY)
