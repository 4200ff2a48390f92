# src/cli/renderers/render_error.py
from rich.table import Table

from src.cli.renderers.make_table import make_table
from src.documents.report_documents import ErrorDocument


def render_error(document: ErrorDocument) -> list[Table]:
    table = make_table("⚠️ エラー", "項目", "内容")
    table.add_row("種類", document.error)
    table.add_row("内容", document.message)
    if document.location:
        table.add_row("場所", document.location)
    return [table]
