# src/cli/renderers/render_validation.py
from rich.table import Table

from src.cli.renderers.make_table import make_table, verdict_mark
from src.documents.report_documents import ValidationDocument


def render_validation(document: ValidationDocument) -> list[Table]:
    summary = make_table("📐 距離の公理チェック", "項目", "結果")
    summary.add_row("判定", verdict_mark(document.ok))
    summary.add_row("違反の数", str(len(document.violations)))
    if document.ok:
        return [summary]

    details = make_table("違反の一覧", "公理", "点", "左辺", "右辺")
    for v in document.violations:
        details.add_row(v.axiom, ", ".join(v.points), v.lhs, v.rhs)
    return [summary, details]
