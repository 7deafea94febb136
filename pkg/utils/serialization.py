"""DOT and JSON renderings of graphs and colorings"""
import json
from typing import Optional

from core.graph import Graph
from schemas.common import GraphPayload
from schemas.patterns import Coloring
from services.exceptions import InvalidArgumentError

# Brewer set3, enough for the colorings the constructions emit
_PALETTE = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
]


def graph_payload(graph: Graph) -> GraphPayload:
    return GraphPayload(n=graph.n, edges=graph.edges())


def to_json(graph: Graph) -> str:
    """{"n": ..., "edges": [[u, v], ...]} with u < v, edges sorted"""
    payload = graph_payload(graph)
    return json.dumps({"n": payload.n, "edges": [list(e) for e in payload.edges]})


def from_json(text: str) -> Graph:
    try:
        payload = GraphPayload.model_validate_json(text)
    except ValueError as exc:
        raise InvalidArgumentError(f"invalid graph JSON: {exc}") from exc
    return Graph.from_edges(payload.n, payload.edges)


def to_dot(graph: Graph, coloring: Optional[Coloring] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        if coloring is not None:
            fill = _PALETTE[coloring.colors[v] % len(_PALETTE)]
            lines.append(f'  {v} [style=filled, fillcolor="{fill}", label="{v}:{coloring.colors[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def coloring_to_json(coloring: Coloring) -> str:
    return json.dumps(list(coloring.colors))


def coloring_from_json(text: str, n: Optional[int] = None) -> Coloring:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"invalid coloring JSON: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("colors")
    if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
        raise InvalidArgumentError("a coloring is a JSON array of integer color ids")
    if n is not None and len(data) != n:
        raise InvalidArgumentError(f"coloring has {len(data)} entries, graph has {n} vertices")
    try:
        return Coloring.from_list(data)
    except ValueError as exc:
        raise InvalidArgumentError(str(exc)) from exc
