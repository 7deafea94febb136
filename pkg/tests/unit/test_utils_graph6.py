"""Unit tests for graph6, JSON and DOT serialization"""
import networkx as nx
import pytest

from core.canonical import canonical_code
from core.generation import enumerate_graphs
from core.graph import Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph
from schemas.patterns import Coloring
from services.exceptions import Graph6ParseError, InvalidArgumentError
from utils.graph6 import parse_graph6, parse_graph6_lines, to_graph6
from utils.serialization import coloring_from_json, coloring_to_json, from_json, to_dot, to_json


def _assert_round_trips(n):
    for graph in enumerate_graphs(n):
        code = to_graph6(graph)
        back = parse_graph6(code)
        assert back == graph
        assert to_graph6(back) == code
        assert canonical_code(back) == canonical_code(graph)
        theirs = nx.from_graph6_bytes(code.encode())
        assert theirs.number_of_nodes() == n
        assert {frozenset(e) for e in theirs.edges()} == {frozenset(e) for e in graph.edges()}


@pytest.mark.unit
class TestGraph6:
    """Test graph6 encoding against the published format"""

    def test_single_vertex(self):
        assert to_graph6(empty_graph(1)) == "@"

    def test_empty_on_zero_vertices(self):
        assert to_graph6(empty_graph(0)) == "?"
        assert parse_graph6("?").n == 0

    def test_k4_round_trip(self, k4):
        assert to_graph6(k4) == "C~"
        assert parse_graph6(to_graph6(k4)) == k4

    @pytest.mark.parametrize("graph", [
        cycle_graph(5),
        complete_bipartite(3, 4),
        complete_graph(9),
        cycle_graph(70),
    ])
    def test_agrees_with_networkx(self, graph):
        expected = nx.to_graph6_bytes(graph.to_networkx(), header=False).decode().strip()
        assert to_graph6(graph) == expected
        assert Graph.from_networkx(nx.from_graph6_bytes(expected.encode())) == parse_graph6(expected)

    def test_header_is_accepted(self, c5):
        assert parse_graph6(">>graph6<<" + to_graph6(c5)) == c5

    def test_invalid_alphabet(self):
        with pytest.raises(Graph6ParseError) as exc:
            parse_graph6("not-graph6!")
        assert exc.value.error_code == "PARSE_ERROR"
        assert exc.value.offset == 3

    def test_wrong_length(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("C~~")

    def test_empty_string(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("")

    def test_nonzero_padding(self):
        # n = 2 has one edge bit; the remaining five must be zero
        with pytest.raises(Graph6ParseError):
            parse_graph6("A" + chr(63 + 0b000001))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_every_class_round_trips(self, n):
        _assert_round_trips(n)

    @pytest.mark.slow
    def test_every_class_round_trips_on_seven(self):
        _assert_round_trips(7)

    def test_lines(self, k4, c5):
        text = f"{to_graph6(k4)}\n\n{to_graph6(c5)}\n"
        assert parse_graph6_lines(text) == [k4, c5]


@pytest.mark.unit
class TestJsonAndDot:
    """Test JSON and DOT renderings"""

    def test_json_round_trip(self, c5):
        assert to_json(c5) == '{"n": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]]}'
        assert from_json(to_json(c5)) == c5

    def test_invalid_json(self):
        with pytest.raises(InvalidArgumentError):
            from_json('{"n": "many"}')

    def test_dot_with_coloring(self, p3_host):
        dot = to_dot(p3_host, Coloring(colors=(0, 1, 0)), "path")
        assert dot.startswith("graph path {")
        assert "0 -- 1;" in dot
        assert 'label="1:1"' in dot

    def test_coloring_json(self):
        coloring = coloring_from_json("[0, 1, 1]", 3)
        assert coloring.colors == (0, 1, 1)
        assert coloring_to_json(coloring) == "[0, 1, 1]"
        assert coloring_from_json('{"colors": [2, 2]}').colors == (2, 2)

    @pytest.mark.parametrize("text", ["[0, 1", '["a"]', "[-1, 0, 0]"])
    def test_bad_colorings(self, text):
        with pytest.raises(InvalidArgumentError):
            coloring_from_json(text, 3)

    def test_coloring_length_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            coloring_from_json("[0, 1]", 3)
