# src/cli/renderers/render_check.py
from rich.table import Table

from src.cli.renderers.make_table import make_table, verdict_mark
from src.documents.report_documents import CheckDocument

INEQUALITY_LABELS: dict[str, str] = {
    "ltp": "台形不等式",
    "sym": "対称版の不等式",
}


def check_rows(table: Table, check: CheckDocument) -> None:
    table.add_row("ペア (u, v)", f"({check.u}, {check.v})")
    table.add_row("判定", verdict_mark(check.holds))
    table.add_row("最悪のタプル", f"({', '.join(check.worst_tuple)}) / {INEQUALITY_LABELS[check.inequality]}")
    relation = "≤" if check.holds else ">"
    table.add_row("左辺 / 右辺", f"(1-{check.epsilon})·{check.lhs} {relation} {check.rhs}")
    table.add_row("slack", check.slack)


def render_check(document: CheckDocument) -> list[Table]:
    title = "🔷 両方の不等式の判定" if document.combined else f"🔷 {INEQUALITY_LABELS[document.inequality]}の判定"
    table = make_table(title, "項目", "値")
    table.add_row("ε", document.epsilon)
    check_rows(table, document)
    return [table]
