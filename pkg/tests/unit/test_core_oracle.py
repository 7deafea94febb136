"""Unit tests for the exact solvers and construction verification"""
import pytest

from core.oracle import (
    exact_ex,
    exact_rex,
    exact_solve,
    exact_ts,
    exact_wex,
    integer_partitions,
    reverify,
    satisfies,
    verify_construction,
)
from core.patterns import pattern, pattern_from_graph
from core.registry import VerifyMode
from core.singular import is_singular_free
from schemas.oracle import GenOptions, Problem
from schemas.patterns import Coloring
from services.exceptions import CostGuardError, InvalidArgumentError
from utils.graph6 import parse_graph6


@pytest.mark.unit
class TestHelpers:
    """Test partitions and problem predicates"""

    def test_integer_partitions(self):
        assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert sum(1 for _ in integer_partitions(10)) == 42

    def test_satisfies(self, k4, c5, k3_pattern):
        assert not satisfies(Problem.TS, k4, k3_pattern)
        assert not satisfies(Problem.WEX, k4.add_vertex(0b1111), k3_pattern)
        assert satisfies(Problem.WEX, k4, k3_pattern)
        assert satisfies(Problem.EX, c5, k3_pattern)
        assert satisfies(Problem.REX, c5, k3_pattern)
        assert not satisfies(Problem.REX, c5.add_vertex(0b1), k3_pattern)


@pytest.mark.unit
class TestExactSolvers:
    """Test small exact optima"""

    @pytest.mark.parametrize("n,value", [(4, 5), (5, 8), (6, 13)])
    def test_ts_triangle(self, n, value):
        result = exact_ts(n, "K3")
        assert result.value == value
        assert result.notes == [f"agrees with the closed form {value}"]

    @pytest.mark.parametrize("n,value", [(3, 2), (4, 5), (5, 7), (6, 11)])
    def test_ts_path(self, n, value):
        assert exact_ts(n, "P3").value == value

    @pytest.mark.parametrize("n,value", [(4, 6), (5, 8), (6, 11)])
    def test_wex_path(self, n, value):
        assert exact_wex(n, "P3").value == value

    @pytest.mark.parametrize("n,value", [(5, 9), (6, 13)])
    def test_wex_triangle(self, n, value):
        assert exact_wex(n, "K3").value == value

    def test_ex_triangle_is_mantel(self):
        result = exact_ex(6, "K3")
        assert result.value == 9
        assert len(result.extremal) == 1
        assert parse_graph6(result.extremal[0]).degrees() == (3,) * 6

    def test_rex_anchors(self):
        assert exact_rex(6, "K3").value == 9
        assert exact_rex(7, "K3").value == 7

    def test_extremal_graphs_are_certified(self):
        result = exact_ts(5, "K3")
        assert result.extremal
        for code in result.extremal:
            graph = parse_graph6(code)
            assert graph.edge_count == result.value
            assert is_singular_free(graph, "K3")
        assert all(report.passed for report in reverify(result))

    def test_reverify_wex(self):
        result = exact_wex(5, "P3")
        assert all(report.worm_valid for report in reverify(result))

    def test_reverify_graph6_pattern(self):
        result = exact_ts(5, pattern_from_graph(parse_graph6("Bg")))
        assert result.pattern == "g6:Bg"
        assert result.value == exact_ts(5, "P3").value
        reports = reverify(result)
        assert reports and all(report.passed for report in reports)

    def test_stats(self):
        result = exact_ts(6, "K3")
        assert result.stats.seed_edges == 13
        assert result.stats.graphs_examined >= 1
        assert result.stats.predicate_calls >= result.stats.graphs_examined
        assert result.to_document()["schema"] == 1

    def test_worker_count_does_not_change_result(self):
        single = exact_ts(6, "P3", GenOptions(workers=1))
        pooled = exact_ts(6, "P3", GenOptions(workers=2, chunk_size=2))
        assert single.value == pooled.value
        assert single.extremal == pooled.extremal

    def test_general_pattern(self):
        result = exact_solve(Problem.EX, 6, "C4")
        assert result.value == 7

    def test_notes_on_bracketed_value(self):
        result = exact_ts(5, "P3")
        assert result.notes == ["pins the closed-form interval [7, 8] at 7"]


@pytest.mark.unit
class TestGuards:
    """Test cost guards and argument checks"""

    def test_ts_guard(self):
        with pytest.raises(CostGuardError):
            exact_ts(11, "K3")

    def test_ts_guard_other_patterns(self):
        with pytest.raises(CostGuardError):
            exact_ts(10, "C5")

    def test_wex_guard(self):
        with pytest.raises(CostGuardError):
            exact_wex(9, "P3")

    def test_wex_needs_three_vertices(self):
        with pytest.raises(InvalidArgumentError):
            exact_wex(5, "K2")

    def test_needs_positive_n(self):
        with pytest.raises(InvalidArgumentError):
            exact_ts(0, "K3")

    def test_edgeless_pattern(self):
        with pytest.raises(InvalidArgumentError):
            exact_ex(4, "K1")


@pytest.mark.unit
class TestVerification:
    """Test verification reports"""

    def test_worm_requires_coloring(self, k4):
        with pytest.raises(InvalidArgumentError):
            verify_construction(k4, "K3", mode=VerifyMode.WORM)

    def test_worm_violation_reported(self, k4):
        report = verify_construction(k4, "K3", coloring=Coloring(colors=(0, 0, 0, 1)))
        assert not report.passed
        assert report.worm_valid is False
        assert report.witness["kind"] == "MONOCHROMATIC"

    def test_copy_free_and_regular(self, c5):
        report = verify_construction(c5, pattern("K3"), 5, mode=VerifyMode.COPY_FREE, expect_regular=True)
        assert report.passed
        assert report.degrees == [2]

    def test_not_regular(self, p3_host):
        report = verify_construction(p3_host, "K3", mode=VerifyMode.COPY_FREE, expect_regular=True)
        assert report.failures == ["graph is not regular"]


@pytest.mark.unit
@pytest.mark.slow
class TestExactSolversSlow:
    """Larger exact optima"""

    @pytest.mark.parametrize("n,value", [(7, 12), (8, 18), (9, 22)])
    def test_ts_path(self, n, value):
        assert exact_ts(n, "P3").value == value

    @pytest.mark.parametrize("n,value", [(7, 18), (8, 24)])
    def test_wex_triangle(self, n, value):
        assert exact_wex(n, "K3").value == value

    @pytest.mark.parametrize("n,value", [(7, 15), (8, 20)])
    def test_wex_path(self, n, value):
        assert exact_wex(n, "P3").value == value

    def test_ts_triangle_8(self):
        assert exact_ts(8, "K3").value == 22

    def test_ts_triangle_7_is_bracketed(self):
        result = exact_ts(7, "K3")
        assert 15 <= result.value <= 17

    def test_rex_8(self):
        assert exact_rex(8, "K3").value == 16
