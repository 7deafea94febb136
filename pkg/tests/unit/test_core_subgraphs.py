"""Unit tests for clique/copy enumeration, canonical labeling and invariants"""
import random

import networkx as nx
import pytest

from core.canonical import (
    are_isomorphic,
    automorphism_generators,
    canonical_code,
    canonical_form,
    canonical_labeling,
)
from core.graph import (
    Graph,
    blow_up,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    turan_graph,
)
from core.invariants import chromatic_number, clique_number, is_bipartite, odd_girth
from core.subgraphs import (
    automorphisms,
    contains_copy,
    copy_vertex_sets,
    count_copies,
    enumerate_cliques,
    enumerate_copies,
)
from services.exceptions import InvalidArgumentError


def _random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@pytest.mark.unit
class TestCliques:
    """Test k-clique enumeration"""

    def test_k4_triangles(self, k4):
        assert list(enumerate_cliques(k4, 3)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    def test_c5_has_no_triangle(self, c5):
        assert list(enumerate_cliques(c5, 3)) == []

    def test_turan_graph_is_k5_free(self, turan_8_4):
        assert list(enumerate_cliques(turan_8_4, 5)) == []
        assert len(list(enumerate_cliques(turan_8_4, 4))) == 16

    def test_within_mask(self, k4):
        assert list(enumerate_cliques(k4, 2, within=0b0011)) == [(0, 1)]

    def test_larger_than_graph(self, k4):
        assert list(enumerate_cliques(k4, 5)) == []

    def test_rejects_non_positive_size(self, k4):
        with pytest.raises(InvalidArgumentError):
            list(enumerate_cliques(k4, 0))

    def test_matches_networkx_clique_counts(self):
        g = _random_graph(14, 0.5, seed=7)
        expected = sum(
            1 for c in nx.enumerate_all_cliques(g.to_networkx()) if len(c) == 4
        )
        assert len(list(enumerate_cliques(g, 4))) == expected


@pytest.mark.unit
class TestCopies:
    """Test non-induced copy enumeration"""

    def test_path_in_path(self, p3_host):
        assert count_copies(p3_host, path_graph(3)) == 1

    def test_paths_in_triangle(self):
        assert count_copies(complete_graph(3), path_graph(3)) == 3
        assert copy_vertex_sets(complete_graph(3), path_graph(3)) == [(0, 1, 2)]

    def test_triangles_in_k4(self, k4):
        assert count_copies(k4, complete_graph(3)) == 4

    def test_copies_are_distinct_edge_sets(self):
        host = complete_bipartite(3, 3)
        copies = list(enumerate_copies(host, cycle_graph(4)))
        edge_sets = {
            frozenset(frozenset((c.embedding[u], c.embedding[v])) for u, v in cycle_graph(4).edges())
            for c in copies
        }
        assert len(copies) == len(edge_sets) == 9

    def test_automorphism_counts(self):
        assert len(automorphisms(path_graph(3))) == 2
        assert len(automorphisms(cycle_graph(5))) == 10
        assert len(automorphisms(star_graph(3))) == 6

    def test_contains_copy(self, c5):
        assert contains_copy(c5, path_graph(4))
        assert not contains_copy(c5, complete_graph(3))
        assert not contains_copy(complete_bipartite(3, 3), cycle_graph(5))


@pytest.mark.unit
class TestCanonical:
    """Test canonical labeling"""

    def test_isomorphic_relabelings_share_a_code(self):
        rng = random.Random(11)
        for seed in range(20):
            g = _random_graph(9, 0.45, seed)
            order = list(range(9))
            rng.shuffle(order)
            h = g.relabel(order)
            assert canonical_code(g) == canonical_code(h)
            assert canonical_form(g) == canonical_form(h)

    def test_codes_agree_with_networkx_isomorphism(self):
        graphs = [_random_graph(7, 0.5, seed) for seed in range(30)]
        for a in graphs[:10]:
            for b in graphs:
                expected = nx.is_isomorphic(a.to_networkx(), b.to_networkx())
                assert (canonical_code(a) == canonical_code(b)) == expected

    def test_labeling_is_a_permutation(self, turan_8_4):
        _, order = canonical_labeling(turan_8_4)
        assert sorted(order) == list(range(8))

    def test_last_position_has_maximum_degree(self):
        for seed in range(25):
            g = _random_graph(8, 0.4, seed)
            _, order = canonical_labeling(g)
            assert g.degree(order[-1]) == g.max_degree()

    def test_regular_graphs_distinguished(self):
        # both 3-regular on 6 vertices, not isomorphic
        prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        assert not are_isomorphic(prism, complete_bipartite(3, 3))
        assert are_isomorphic(complete_bipartite(3, 3), turan_graph(6, 2))

    def test_automorphism_generators_preserve_edges(self, c5):
        generators = automorphism_generators(c5)
        assert generators
        for perm in generators:
            assert sorted(perm) == list(range(5))
            assert all(c5.has_edge(perm[u], perm[v]) for u, v in c5.edges())


@pytest.mark.unit
class TestInvariants:
    """Test odd girth, clique number and chromatic number"""

    def test_odd_girth_of_cycle(self, c5):
        assert odd_girth(c5) == 5

    def test_bipartite_has_no_odd_girth(self):
        assert odd_girth(complete_bipartite(3, 3)) is None
        assert is_bipartite(cycle_graph(6))

    def test_blow_up_keeps_odd_girth(self):
        assert odd_girth(blow_up(cycle_graph(7), 3)) == 7

    def test_clique_and_chromatic_numbers(self, c5, k5):
        assert clique_number(c5) == 2
        assert chromatic_number(c5) == 3
        assert chromatic_number(k5) == 5
        assert chromatic_number(turan_graph(9, 4)) == 4
        assert chromatic_number(complete_bipartite(2, 5)) == 2
