"""Unit tests for comparison tables and their rendering"""
import pytest

from core.tables import TABLE_FAMILIES, build_row, build_table, classify
from schemas.constructions import RowStatus, TableRow
from schemas.formulas import BoundKind, FormulaResult, FormulaValue
from services.exceptions import InvalidArgumentError
from utils.tables import render_csv, render_markdown


def _exact(value):
    return FormulaResult(values=[FormulaValue(value=value, kind=BoundKind.EXACT, source="t")])


def _bracket(low, high):
    return FormulaResult(values=[
        FormulaValue(value=low, kind=BoundKind.LOWER, source="t"),
        FormulaValue(value=high, kind=BoundKind.UPPER, source="t"),
    ])


@pytest.mark.unit
class TestClassify:
    """Test row status rules"""

    def test_agree(self):
        assert classify(_exact(22), 22, 22)[0] == RowStatus.AGREE

    def test_unchecked(self):
        assert classify(_exact(22), None, None)[0] == RowStatus.UNCHECKED

    def test_oracle_outside_formula(self):
        status, why = classify(_exact(22), 22, 21)
        assert status == RowStatus.MISMATCH
        assert "outside" in why

    def test_construction_above_upper(self):
        assert classify(_bracket(15, 17), 18, None)[0] == RowStatus.MISMATCH

    def test_construction_above_optimum(self):
        assert classify(_bracket(10, 20), 16, 15)[0] == RowStatus.MISMATCH

    def test_construction_below_exact(self):
        assert classify(_exact(5), 4, None)[0] == RowStatus.BRACKETED

    def test_oracle_attains_lower_bound(self):
        status, why = classify(_bracket(12, 15), 12, 12)
        assert status == RowStatus.AGREE
        assert why == "optimum attains the lower bound"

    def test_oracle_pins_interval(self):
        assert classify(_bracket(15, 17), 15, 16)[0] == RowStatus.BRACKETED


@pytest.mark.unit
class TestBuildRows:
    """Test table rows built from formulas and constructions"""

    def test_families(self):
        assert TABLE_FAMILIES == sorted(TABLE_FAMILIES)
        assert "ts-p3" in TABLE_FAMILIES

    def test_triangle_rows(self):
        rows = build_table("ts-k3", range(5, 10))
        assert [row.construction for row in rows] == [8, 13, 15, 22, 28]
        assert [row.status for row in rows] == [
            RowStatus.AGREE, RowStatus.AGREE, RowStatus.BRACKETED, RowStatus.AGREE, RowStatus.BRACKETED
        ]
        assert rows[2].formula == "[15, 17]"
        assert rows[4].formula == "29"
        assert rows[4].note == "construction below the exact value"

    def test_clique_rows(self):
        rows = build_table("clique", range(18, 28), r=3)
        assert all(row.status != RowStatus.MISMATCH for row in rows)
        assert rows[0].construction == 141
        assert rows[0].status == RowStatus.AGREE

    def test_clique_needs_r(self):
        with pytest.raises(InvalidArgumentError):
            build_row("clique", 18)

    def test_unknown_family(self):
        with pytest.raises(InvalidArgumentError):
            build_row("ramsey", 5)

    def test_rex_row(self):
        row = build_row("rex-k3", 6)
        assert row.construction == 9
        assert row.status == RowStatus.AGREE

    def test_oracle_rows(self):
        rows = build_table("ts-p3", range(3, 7), with_oracle=True)
        assert [row.oracle for row in rows] == [2, 5, 7, 11]
        assert all(row.status == RowStatus.AGREE for row in rows)

    def test_wex_path_rows(self):
        rows = build_table("wex-p3", range(4, 7), with_oracle=True)
        assert [row.construction for row in rows] == [6, 8, 11]
        assert [row.oracle for row in rows] == [6, 8, 11]
        assert all(row.status == RowStatus.AGREE for row in rows)

    def test_oracle_refusal_becomes_a_note(self):
        row = build_row("wex-p3", 9, with_oracle=True)
        assert row.oracle is None
        assert "oracle skipped" in row.note


@pytest.mark.unit
class TestRendering:
    """Test Markdown and CSV output"""

    @pytest.fixture
    def rows(self):
        return [
            TableRow(n=7, formula="[15, 17]", construction=15, oracle=None,
                     status=RowStatus.BRACKETED, note="a|b"),
            TableRow(n=8, formula="22", construction=22, oracle=22, status=RowStatus.AGREE),
        ]

    def test_markdown(self, rows):
        text = render_markdown(rows)
        lines = text.splitlines()
        assert lines[0] == "| n | formula | construction | oracle | status | note |"
        assert lines[2] == "| 7 | [15, 17] | 15 |  | BRACKETED | a\\|b |"
        assert len(lines) == 4

    def test_csv(self, rows):
        text = render_csv(rows)
        assert text.splitlines() == [
            "n,formula,construction,oracle,status,note",
            '7,"[15, 17]",15,,BRACKETED,a|b',
            "8,22,22,22,AGREE,",
        ]
