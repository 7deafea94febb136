"""Markdown and CSV rendering of comparison tables"""
import csv
import io

from schemas.constructions import TableRow

COLUMNS = ["n", "formula", "construction", "oracle", "status", "note"]


def _cells(row: TableRow) -> list[str]:
    return [
        str(row.n),
        row.formula,
        "" if row.construction is None else str(row.construction),
        "" if row.oracle is None else str(row.oracle),
        row.status.value,
        row.note,
    ]


def render_markdown(rows: list[TableRow]) -> str:
    lines = [
        "| " + " | ".join(COLUMNS) + " |",
        "|" + "|".join("---" for _ in COLUMNS) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(cell.replace("|", "\\|") for cell in _cells(row)) + " |")
    return "\n".join(lines)


def render_csv(rows: list[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(_cells(row))
    return buffer.getvalue().rstrip("\n")
