"""
Extremal and lower-bound graphs for singular Turán and WORM problems.

Every builder is deterministic: blocks of a complete multipartite graph are
laid out as consecutive vertex ranges in ascending part size, and any
"pick one of several equivalent parts" choice takes the lowest-indexed one.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterator, NamedTuple, Optional

from core.graph import (
    Graph,
    PartSizes,
    blow_up,
    circulant_graph,
    complete_graph,
    complete_bipartite,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_regular,
    mask_of,
    turan_graph,
)
from core.patterns import PatternGraph, as_pattern
from core.subgraphs import contains_copy
from schemas.patterns import Coloring
from services.exceptions import DomainError, InvalidArgumentError
from services.logger import get_logger

logger = get_logger(__name__)


def distinct_partitions(total: int, parts: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Strictly increasing tuples of `parts` positive integers summing to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    # the remaining parts are at least smallest, smallest+1, ...
    floor = parts * smallest + parts * (parts - 1) // 2
    if total < floor:
        return
    for first in range(smallest, total + 1):
        if parts * first + parts * (parts - 1) // 2 > total:
            break
        for rest in distinct_partitions(total - first, parts - 1, first + 1):
            yield (first,) + rest


# ---- triangles -------------------------------------------------------------


def caro_tuza_k3(n: int) -> Graph:
    """Singular-K3-free graph from complete 4-partite blocks, one shape per n mod 4"""
    if n < 4:
        raise InvalidArgumentError(f"caro_tuza_k3 needs n >= 4, got {n}")
    k, rem = divmod(n, 4)
    if rem == 0:
        graph = complete_multipartite([s for s in (k - 1, k - 1, k + 1, k + 1) if s > 0])
    elif rem == 1:
        base = complete_multipartite([k, k, k, k])
        graph = base.add_vertex(mask_of(range(2 * k)))
    elif rem == 2:
        graph = turan_graph(n, 4)
    else:
        base = complete_multipartite([k, k, k + 1, k + 1])
        graph = base.add_vertex(mask_of(range(2 * k)))
    logger.debug("construction_built", name="caro-tuza-k3", n=n, edges=graph.edge_count)
    return graph


def caro_tuza_k3_edges(n: int) -> int:
    k, rem = divmod(n, 4)
    if rem == 0:
        return 6 * k * k - 2
    if rem == 1:
        return 6 * k * k + 2 * k
    if rem == 2:
        return PartSizes.balanced(n, 4).edge_count()
    return 6 * k * k + 8 * k + 1


# ---- property R ------------------------------------------------------------


def _check_property_r(n: int, r: int) -> None:
    if r < 2:
        raise InvalidArgumentError(f"property R needs r >= 2, got {r}")
    if n % r or n < r * r * (r + 1) // 2:
        raise DomainError(
            f"no complete {r * r}-partite graph with property R on {n} vertices "
            f"(needs {r} | n and n >= {r * r * (r + 1) // 2})"
        )


def property_r_partition(n: int, r: int) -> PartSizes:
    """The r distinct block sizes l_1 < ... < l_r maximizing the edge count"""
    _check_property_r(n, r)
    k = n // r
    best = min(distinct_partitions(k, r), key=lambda ls: (sum(comb(s, 2) for s in ls), ls))
    return PartSizes(best)


def property_r_sizes(n: int, r: int) -> PartSizes:
    """All r^2 part sizes: each block size repeated r times"""
    return PartSizes([s for s in property_r_partition(n, r) for _ in range(r)])


def property_r_graph(n: int, r: int) -> Graph:
    return complete_multipartite(property_r_sizes(n, r))


def t_prime_edges(n: int, r: int) -> int:
    return property_r_sizes(n, r).edge_count()


def _split_remainder(n: int, r: int) -> tuple[int, int]:
    if r < 2:
        raise InvalidArgumentError(f"need r >= 2, got {r}")
    return n - n % r, n % r


def clique_extension_graph(n: int, r: int) -> Graph:
    """Property-R graph on n-m vertices plus a clique of m low-degree vertices"""
    base_n, m = _split_remainder(n, r)
    if m == 0:
        raise InvalidArgumentError(f"clique extension needs r not dividing n (n={n}, r={r})")
    ls = property_r_partition(base_n, r)
    base = property_r_graph(base_n, r)
    # blocks are laid out ascending, so the r-1 smallest sizes occupy the front
    joined = mask_of(range(r * sum(ls.sizes[:-1])))
    graph = base
    for i in range(m):
        new_clique = mask_of(range(base_n, base_n + i))
        graph = graph.add_vertex(joined | new_clique)
    return graph


def clique_extension_edges(n: int, r: int) -> int:
    base_n, m = _split_remainder(n, r)
    ls = property_r_partition(base_n, r)
    return t_prime_edges(base_n, r) + comb(m, 2) + m * r * sum(ls.sizes[:-1])


class _RemovalPlan(NamedTuple):
    full_n: int
    odd_size: int
    shrunk: int


def _removal_plan(n: int, r: int) -> _RemovalPlan:
    if r < 3:
        raise DomainError(f"matching removal needs r >= 3, got {r}")
    _, m = _split_remainder(n, r)
    if not 1 <= m <= r - 2:
        raise DomainError(f"matching removal needs n mod r in 1..{r - 2}, got {m}")
    full_n = n + (r - m)
    ls = property_r_partition(full_n, r)
    odd = [s for s in ls.sizes if s % 2]
    if not odd:
        raise DomainError(f"no odd block size in {ls.sizes}")
    return _RemovalPlan(full_n, max(odd), r - m)


def matching_removal_graph(n: int, r: int) -> Graph:
    """Property-R graph on r(k+1) vertices, shrink r-m parts of an odd size, drop a perfect matching"""
    full_n, s, shrunk = _removal_plan(n, r)
    sizes = property_r_sizes(full_n, r)
    base = complete_multipartite(sizes)
    blocks = [b for b in sizes.blocks() if len(b) == s][:shrunk]
    removed = {b[-1] for b in blocks}
    keep = [v for v in range(full_n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    graph = base.induced_subgraph(keep)

    # pair position i with i + N/2; parts span s-1 consecutive positions, so pairs cross parts
    pool = [index[v] for b in blocks for v in b[:-1]]
    half = len(pool) // 2
    matching = [(pool[i], pool[i + half]) for i in range(half)]
    return graph.remove_edges(matching)


def matching_removal_edges(n: int, r: int) -> int:
    full_n, s, shrunk = _removal_plan(n, r)
    return (
        t_prime_edges(full_n, r)
        - shrunk * (full_n - s)
        + comb(shrunk, 2)
        - shrunk * (s - 1) // 2
    )


# ---- non-r-partite K_{r+1}-free graphs -------------------------------------


def hanson_toft_graph(n: int, r: int, a_size: int = 1) -> Graph:
    """K_{r+1}-free graph of chromatic number r+1 with t(n,r) - floor(n/r) + 1 edges"""
    if r < 2:
        raise InvalidArgumentError(f"need r >= 2, got {r}")
    if n < 2 * r + 1:
        raise InvalidArgumentError(f"hanson_toft_graph needs n >= 2r+1 = {2 * r + 1}, got {n}")
    parts = PartSizes.balanced(n - 1, r)
    blocks = parts.blocks()
    small, large = blocks[0], blocks[1]
    if a_size < 1 or a_size >= len(large):
        raise InvalidArgumentError(
            f"|A| must satisfy 1 <= |A| < {len(large)} (size of the class A is taken from)"
        )
    base = complete_multipartite(parts)
    u = small[0]
    a_set = list(large[:a_size])
    others = mask_of(v for b in blocks[2:] for v in b)
    graph = base.add_vertex(others | mask_of([u] + a_set))
    return graph.remove_edges((u, a) for a in a_set)


# ---- P3 --------------------------------------------------------------------


class P3Shape(NamedTuple):
    """K_{p,q} with perfect matchings on the flagged sides"""
    p: int
    q: int
    match_p: bool
    match_q: bool

    @property
    def edges(self) -> int:
        return self.p * self.q + (self.p // 2 if self.match_p else 0) + (self.q // 2 if self.match_q else 0)

    @property
    def side_degrees(self) -> tuple[int, int]:
        return self.q + int(self.match_p), self.p + int(self.match_q)


def p3_shapes(n: int) -> Iterator[P3Shape]:
    """Shapes whose two side degrees differ; these contain no singular P3"""
    for p in range(1, n // 2 + 1):
        q = n - p
        for match_p in (False, True):
            if match_p and p % 2:
                continue
            for match_q in (False, True):
                if match_q and q % 2:
                    continue
                shape = P3Shape(p, q, match_p, match_q)
                a, b = shape.side_degrees
                if a != b:
                    yield shape


def p3_extremal_shape(n: int) -> P3Shape:
    if n < 5:
        raise InvalidArgumentError(f"p3_extremal needs n >= 5, got {n}")
    return max(p3_shapes(n), key=lambda s: (s.edges, -s.p, s.match_p, s.match_q))


def _bipartite_with_matchings(p: int, q: int, match_p: bool, match_q: bool) -> Graph:
    """K_{p,q} on 0..p-1 | p..n-1 plus maximal matchings; an odd side leaves its last vertex bare"""
    graph = complete_bipartite(p, q)
    extra = []
    if match_p:
        extra += [(i, i + 1) for i in range(0, p - 1, 2)]
    if match_q:
        extra += [(p + i, p + i + 1) for i in range(0, q - 1, 2)]
    return graph.add_edges(extra)


def p3_extremal(n: int) -> Graph:
    """Largest singular-P3-free member of the bipartite-plus-perfect-matchings family"""
    shape = p3_extremal_shape(n)
    return _bipartite_with_matchings(*shape)


class WormConstruction(NamedTuple):
    graph: Graph
    coloring: Coloring


def p3_wex_graph(n: int) -> WormConstruction:
    """K_{floor(n/2),ceil(n/2)} plus maximal matchings in both sides, colored by side"""
    if n < 2:
        raise InvalidArgumentError(f"p3_wex_graph needs n >= 2, got {n}")
    p, q = n // 2, n - n // 2
    graph = _bipartite_with_matchings(p, q, True, True)
    return WormConstruction(graph, Coloring(colors=tuple([0] * p + [1] * q)))


# ---- WORM Turán-type graphs --------------------------------------------------


class IntraKind(str, Enum):
    DISJOINT_CLIQUES = "cliques"
    REGULAR = "regular"
    TURAN = "turan"
    NONE = "none"


@dataclass(frozen=True)
class IntraStrategy:
    """What to place inside each part of the r-partite frame"""
    kind: IntraKind
    param: int = 0

    @classmethod
    def disjoint_cliques(cls, k: int) -> "IntraStrategy":
        return cls(IntraKind.DISJOINT_CLIQUES, k)

    @classmethod
    def regular(cls, d: int) -> "IntraStrategy":
        return cls(IntraKind.REGULAR, d)

    @classmethod
    def turan(cls, q: int) -> "IntraStrategy":
        return cls(IntraKind.TURAN, q)

    @classmethod
    def none(cls) -> "IntraStrategy":
        return cls(IntraKind.NONE, 0)

    @classmethod
    def parse(cls, text: str) -> "IntraStrategy":
        """'cliques:2', 'regular:2', 'turan:3' or 'none'"""
        kind, _, param = text.strip().lower().partition(":")
        try:
            intra_kind = IntraKind(kind)
        except ValueError as exc:
            raise InvalidArgumentError(f"unknown intra strategy {text!r}") from exc
        if intra_kind == IntraKind.NONE:
            return cls.none()
        if not param.isdigit():
            raise InvalidArgumentError(f"intra strategy {kind} needs an integer parameter")
        return cls(intra_kind, int(param))

    def __str__(self) -> str:
        return self.kind.value if self.kind == IntraKind.NONE else f"{self.kind.value}:{self.param}"

    def build(self, size: int) -> Graph:
        if self.kind == IntraKind.NONE:
            return empty_graph(size)
        if self.kind == IntraKind.DISJOINT_CLIQUES:
            k = self.param
            if k < 1 or size % k:
                raise DomainError(f"cannot split a part of size {size} into copies of K{k}")
            return disjoint_union(*[complete_graph(k) for _ in range(size // k)])
        if self.kind == IntraKind.REGULAR:
            d = self.param
            if d == 0:
                return empty_graph(size)
            if d >= size or (d * size) % 2:
                raise DomainError(f"no {d}-regular circulant on {size} vertices")
            offsets = list(range(1, d // 2 + 1))
            if d % 2:
                offsets.append(size // 2)
            graph = circulant_graph(size, offsets)
            if is_regular(graph) != d:
                raise DomainError(f"circulant on {size} vertices with offsets {offsets} is not {d}-regular")
            return graph
        q = self.param
        if q < 1:
            raise DomainError(f"turan strategy needs q >= 1, got {q}")
        return turan_graph(size, q)


def worm_turan_graph(n: int, pattern, intra: IntraStrategy) -> WormConstruction:
    """Balanced complete r-partite graph, r = |V(F)| - 1, with an F-free graph in each part.

    Coloring by part index is an F-WORM coloring: r colors leave no room for
    a rainbow copy, and each color class induces an F-free graph.
    """
    f: PatternGraph = as_pattern(pattern)
    r = f.order - 1
    if r < 2:
        raise InvalidArgumentError(f"WORM constructions need |V(F)| >= 3, got {f.name}")
    if n < r:
        raise DomainError(f"need at least {r} vertices for {r} parts, got {n}")
    parts = PartSizes.balanced(n, r)
    graph = complete_multipartite(parts)
    colors: list[int] = []
    extra = []
    for index, block in enumerate(parts.blocks()):
        inner = intra.build(len(block))
        if contains_copy(inner, f.graph):
            raise DomainError(f"intra graph {intra} on {len(block)} vertices contains {f.name}")
        extra += [(block[u], block[v]) for u, v in inner.edges()]
        colors += [index] * len(block)
    graph = graph.add_edges(extra)
    logger.debug("construction_built", name="worm-turan", n=n, pattern=f.name, intra=str(intra))
    return WormConstruction(graph, Coloring(colors=tuple(colors)))


def worm_turan_edges(n: int, pattern, intra: IntraStrategy) -> int:
    f = as_pattern(pattern)
    parts = PartSizes.balanced(n, f.order - 1)
    return parts.edge_count() + sum(intra.build(s).edge_count for s in parts.sizes)


# ---- regular Turán ---------------------------------------------------------


def distinct_parts_sizes(n: int, r: int) -> PartSizes:
    """Most balanced r pairwise-distinct part sizes summing to n"""
    if r < 1:
        raise InvalidArgumentError(f"need r >= 1, got {r}")
    floor = r * (r + 1) // 2
    if n < floor:
        raise DomainError(f"{r} distinct positive parts need n >= {floor}, got {n}")
    spare = n - r * (r - 1) // 2
    base, extra = divmod(spare, r)
    sizes = [base + i for i in range(r)]
    for i in range(r - extra, r):
        sizes[i] += 1
    return PartSizes(sizes)


def distinct_parts_turan(n: int, r: int) -> Graph:
    return complete_multipartite(distinct_parts_sizes(n, r))


class OddGirthPlan(NamedTuple):
    q: int
    r: int


def odd_girth_plan(n: int, g: int) -> Optional[OddGirthPlan]:
    """Largest odd q with n = (g+6)q + 2r and 0 <= r <= g+5, for odd n"""
    if g < 3 or g % 2 == 0:
        raise InvalidArgumentError(f"odd girth bound must be odd and >= 3, got {g}")
    if n % 2 == 0:
        return None
    q = n // (g + 6)
    if q % 2 == 0:
        q -= 1
    while q >= 1:
        rest = n - (g + 6) * q
        if rest % 2 == 0 and 0 <= rest // 2 <= g + 5:
            return OddGirthPlan(q, rest // 2)
        q -= 2
    raise DomainError(f"n={n} admits no decomposition (g+6)q + 2r with q odd, 0 <= r <= {g + 5}")


def regular_odd_girth_graph(n: int, g: int) -> Graph:
    """Regular graph with odd girth > g: K_{n/2,n/2} for even n, two regular components for odd n"""
    plan = odd_girth_plan(n, g)
    if plan is None:
        return complete_bipartite(n // 2, n // 2)
    q, r = plan
    m = 2 * q + r
    # K_{m,m} minus the cyclic matchings x_a -- y_{a+i}, i < r
    edges = [(a, m + b) for a in range(m) for b in range(m) if (b - a) % m >= r]
    sparse_bipartite = Graph.from_edges(2 * m, edges)
    graph = disjoint_union(sparse_bipartite, blow_up(cycle_graph(g + 2), q))
    logger.debug("construction_built", name="regular-odd-girth", n=n, g=g, q=q, r=r)
    return graph
