"""Unit tests for closed-form values and bounds"""
import pytest

from core import formulas as f
from core.constructions import caro_tuza_k3_edges, clique_extension_graph
from core.singular import is_singular_free
from schemas.formulas import BoundKind, FormulaResult, FormulaValue
from services.exceptions import DomainError, InvalidArgumentError, NotFoundError
from utils.graph6 import parse_graph6


def _kinds(result: FormulaResult) -> set:
    return {v.kind for v in result.values}


@pytest.mark.unit
class TestTuran:
    """Test t(n, q) and t'(n, r^2)"""

    @pytest.mark.parametrize("n,q,edges", [(8, 4, 24), (9, 4, 30), (18, 9, 144), (0, 3, 0), (13, 4, 63)])
    def test_turan_edges(self, n, q, edges):
        assert f.turan_edges(n, q) == edges

    def test_turan_needs_a_part(self):
        with pytest.raises(InvalidArgumentError):
            f.turan_edges(5, 0)

    @pytest.mark.parametrize("n,value", [(18, 141), (27, 321)])
    def test_t_prime(self, n, value):
        result = f.t_prime(n, 3)
        assert result.value == value
        assert result.kind == BoundKind.EXACT

    def test_t_prime_domain(self):
        with pytest.raises(DomainError):
            f.t_prime(20, 3)


@pytest.mark.unit
class TestSingularTuran:
    """Test T_S formulas for triangles, paths and cliques"""

    @pytest.mark.parametrize("n,value", [(4, 5), (5, 8), (6, 13), (8, 22), (9, 29), (10, 37)])
    def test_ts_k3_exact(self, n, value):
        assert f.ts_k3(n).exact == value

    def test_ts_k3_bracket_at_7(self):
        result = f.ts_k3(7)
        assert result.exact is None
        assert (result.lower, result.upper) == (15, 17)
        assert result.describe() == "[15, 17]"

    def test_ts_k3_nine_exceeds_the_construction(self):
        witness = parse_graph6("HLr~v~}")
        assert witness.edge_count == f.ts_k3(9).exact == 29
        assert is_singular_free(witness, "K3")
        assert caro_tuza_k3_edges(9) == 28

    def test_ts_k3_bracket_for_larger_4k_plus_1(self):
        result = f.ts_k3(13)
        assert result.exact is None
        assert (result.lower, result.upper) == (60, 62)

    def test_ts_k3_domain(self):
        with pytest.raises(InvalidArgumentError):
            f.ts_k3(2)

    @pytest.mark.parametrize("n,bounds", [(8, (22, 23)), (9, (28, 29)), (7, (15, 17))])
    def test_earlier_triangle_bounds(self, n, bounds):
        result = f.caro_tuza_k3_bounds(n)
        assert (result.lower, result.upper) == bounds

    def test_earlier_bounds_contain_exact_values(self):
        for n in range(5, 30):
            earlier = f.caro_tuza_k3_bounds(n)
            current = f.ts_k3(n)
            assert earlier.lower <= current.lower <= current.upper <= earlier.upper

    @pytest.mark.parametrize("n,value", [(3, 2), (4, 5), (6, 11), (8, 18), (10, 29)])
    def test_ts_p3_exact(self, n, value):
        assert f.ts_p3(n).exact == value

    @pytest.mark.parametrize("n,bounds", [(5, (7, 8)), (7, (12, 15)), (9, (22, 24)), (12, (39, 40))])
    def test_ts_p3_bracketed(self, n, bounds):
        result = f.ts_p3(n)
        assert result.exact is None
        assert (result.lower, result.upper) == bounds

    def test_p3_closed_form(self):
        assert [f.p3_closed_form(n) for n in range(3, 10)] == [2, 5, 8, 11, 15, 18, 24]

    def test_clique_exact_with_property_r(self):
        result = f.ts_clique_bounds(18, 3)
        assert result.exact == 141
        assert f.LARGE_N in result.values[0].source
        assert _kinds(result) == {BoundKind.EXACT}

    def test_clique_bounds_without_property_r(self):
        result = f.ts_clique_bounds(20, 3)
        assert result.upper == 179
        assert result.lower == 160
        assert clique_extension_graph(20, 3).edge_count <= result.upper
        assert "unspecified constant" in next(v.source for v in result.values if v.kind == BoundKind.UPPER)

    def test_clique_bounds_need_r_3(self):
        with pytest.raises(InvalidArgumentError):
            f.ts_clique_bounds(18, 2)


@pytest.mark.unit
class TestWorm:
    """Test wex formulas"""

    @pytest.mark.parametrize("n,value", [(4, 6), (5, 8), (6, 11), (7, 15), (8, 20)])
    def test_wex_p3(self, n, value):
        assert f.wex_p3(n).exact == value

    @pytest.mark.parametrize("n,r,value", [(8, 2, 24), (5, 2, 9), (9, 3, 36)])
    def test_wex_clique(self, n, r, value):
        assert f.wex_clique(n, r).exact == value

    def test_wex_lower(self):
        assert f.wex_lower(8, "K3").lower == 24
        assert f.wex_lower(9, "C5").lower == f.turan_edges(9, 8)

    def test_bipartite_upper(self):
        assert f.wex_bipartite_upper(8, "P3", 4).upper == 20 == f.wex_p3(8).exact
        assert f.wex_bipartite_upper(6, "C4", 7).upper == 19

    def test_bipartite_upper_rejects_odd_cycle(self):
        with pytest.raises(DomainError):
            f.wex_bipartite_upper(6, "K3", 3)

    def test_tree_and_star(self):
        assert f.wex_tree(16, 2).exact == 72
        assert f.wex_star(9, 3).exact == 36
        assert f.LARGE_N in f.wex_star(9, 3).values[0].source

    def test_tree_and_star_domains(self):
        with pytest.raises(DomainError):
            f.wex_tree(15, 2)
        with pytest.raises(DomainError):
            f.wex_star(9, 2)


@pytest.mark.unit
class TestBrouwerAndRegular:
    """Test the non-r-partite bound and rex values"""

    @pytest.mark.parametrize("n,r,value", [(9, 4, 29), (13, 4, 61)])
    def test_brouwer(self, n, r, value):
        assert f.brouwer_bound(n, r).upper == value

    def test_brouwer_domain(self):
        with pytest.raises(DomainError):
            f.brouwer_bound(8, 4)

    def test_rex_even_triangle(self):
        result = f.rex_values(6, "K3")
        assert result.exact == 9

    def test_rex_odd_triangle(self):
        result = f.rex_values(7, "K3")
        assert result.upper == 9
        assert result.contains(7)

    def test_rex_23_triangle_has_construction(self):
        result = f.rex_values(23, "K3")
        sources = {v.source: v.value for v in result.values}
        assert sources["regular odd-girth construction"] == 23
        assert result.upper == 105

    def test_rex_c5(self):
        result = f.rex_values(33, "C5")
        assert 99 in [v.value for v in result.values if v.kind == BoundKind.LOWER]

    def test_rex_rejects_bipartite(self):
        with pytest.raises(DomainError):
            f.rex_values(8, "C4")


@pytest.mark.unit
class TestFormulaResult:
    """Test bound ordering and the family dispatcher"""

    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValueError):
            FormulaResult(values=[
                FormulaValue(value=10, kind=BoundKind.LOWER, source="a"),
                FormulaValue(value=5, kind=BoundKind.UPPER, source="b"),
            ])

    def test_lower_never_exceeds_upper(self):
        for family in ("ts-k3", "ts-p3", "caro-tuza-k3", "rex-k3"):
            for n in range(5, 25):
                result = f.formula_family(family, n)
                if result.lower is not None and result.upper is not None:
                    assert result.lower <= result.upper

    def test_dispatch(self):
        assert f.formula_family("wex-clique", 8, r=2).exact == 24
        assert f.formula_family("rex", 6).exact == 9

    def test_missing_parameter(self):
        with pytest.raises(InvalidArgumentError):
            f.formula_family("clique", 18)

    def test_unknown_family(self):
        with pytest.raises(NotFoundError):
            f.formula_family("ramsey", 5)
