"""Formula / construction / oracle comparison rows"""
from __future__ import annotations

from typing import Callable, Optional

from core import constructions as c
from core.formulas import formula_family
from core.graph import complete_bipartite, cycle_graph, turan_graph
from core.oracle import exact_solve
from schemas.constructions import RowStatus, TableRow
from schemas.formulas import FormulaResult
from schemas.oracle import GenOptions, Problem
from services.exceptions import DomainError, InvalidArgumentError, SingularTuranError
from services.logger import get_logger

logger = get_logger(__name__)


def _rex_k3(n: int, r: Optional[int]) -> int:
    if n % 2 == 0:
        return complete_bipartite(n // 2, n // 2).edge_count
    best = cycle_graph(n).edge_count if n > 3 else 0
    try:
        best = max(best, c.regular_odd_girth_graph(n, 3).edge_count)
    except DomainError:
        pass
    return best


def _clique(n: int, r: Optional[int]) -> int:
    if r is None:
        raise InvalidArgumentError("the clique family needs r")
    try:
        return c.property_r_graph(n, r).edge_count
    except DomainError:
        pass
    sizes = []
    for build in (c.clique_extension_graph, c.matching_removal_graph):
        try:
            sizes.append(build(n, r).edge_count)
        except (DomainError, InvalidArgumentError):
            continue
    if not sizes:
        raise DomainError(f"no clique construction covers n={n}, r={r}")
    return max(sizes)


CONSTRUCTIONS: dict[str, Callable[[int, Optional[int]], int]] = {
    "ts-k3": lambda n, r: c.caro_tuza_k3(n).edge_count,
    "caro-tuza-k3": lambda n, r: c.caro_tuza_k3(n).edge_count,
    "ts-p3": lambda n, r: c.p3_extremal(n).edge_count,
    "wex-p3": lambda n, r: c.p3_wex_graph(n).graph.edge_count,
    "wex-k3": lambda n, r: turan_graph(n, 4).edge_count,
    "rex-k3": _rex_k3,
    "clique": _clique,
}

ORACLE: dict[str, Callable[[Optional[int]], tuple[Problem, str]]] = {
    "ts-k3": lambda r: (Problem.TS, "K3"),
    "caro-tuza-k3": lambda r: (Problem.TS, "K3"),
    "ts-p3": lambda r: (Problem.TS, "P3"),
    "wex-p3": lambda r: (Problem.WEX, "P3"),
    "wex-k3": lambda r: (Problem.WEX, "K3"),
    "rex-k3": lambda r: (Problem.REX, "K3"),
    "clique": lambda r: (Problem.TS, f"K{r + 1}"),
}

TABLE_FAMILIES = sorted(CONSTRUCTIONS)


def classify(formula: FormulaResult, construction: Optional[int], oracle: Optional[int]) -> tuple[RowStatus, str]:
    """Status of one row plus a short explanation"""
    if oracle is not None and not formula.contains(oracle):
        return RowStatus.MISMATCH, f"oracle {oracle} outside {formula.describe()}"
    if construction is not None:
        if formula.upper is not None and construction > formula.upper:
            return RowStatus.MISMATCH, f"construction {construction} exceeds upper bound {formula.upper}"
        if oracle is not None and construction > oracle:
            return RowStatus.MISMATCH, f"construction {construction} exceeds the optimum {oracle}"
    checked = [v for v in (construction, oracle) if v is not None]
    if formula.exact is not None:
        if not checked:
            return RowStatus.UNCHECKED, ""
        if all(v == formula.exact for v in checked):
            return RowStatus.AGREE, ""
        return RowStatus.BRACKETED, "construction below the exact value"
    if oracle is not None and oracle == formula.lower:
        return RowStatus.AGREE, "optimum attains the lower bound"
    if oracle is not None:
        return RowStatus.BRACKETED, f"optimum {oracle} pins {formula.describe()}"
    return RowStatus.BRACKETED, ""


def build_row(
    family: str, n: int, r: Optional[int] = None, with_oracle: bool = False, workers: int = 1
) -> TableRow:
    if family not in CONSTRUCTIONS:
        raise InvalidArgumentError(f"unknown table family {family!r}; choose from {', '.join(TABLE_FAMILIES)}")
    formula = formula_family(family, n, r=r)
    notes = []
    try:
        construction: Optional[int] = CONSTRUCTIONS[family](n, r)
    except (DomainError, InvalidArgumentError) as exc:
        construction = None
        notes.append(f"no construction: {exc.message}")
    oracle: Optional[int] = None
    if with_oracle:
        problem, pattern = ORACLE[family](r)
        try:
            oracle = exact_solve(problem, n, pattern, GenOptions(workers=workers)).value
        except SingularTuranError as exc:
            notes.append(f"oracle skipped: {exc.message}")
    status, why = classify(formula, construction, oracle)
    if why:
        notes.insert(0, why)
    row = TableRow(
        n=n,
        formula=formula.describe(),
        construction=construction,
        oracle=oracle,
        status=status,
        note="; ".join(notes),
    )
    logger.debug("table_row_built", family=family, n=n, status=status.value)
    return row


def build_table(
    family: str, ns: range, r: Optional[int] = None, with_oracle: bool = False, workers: int = 1
) -> list[TableRow]:
    return [build_row(family, n, r, with_oracle, workers) for n in ns]
