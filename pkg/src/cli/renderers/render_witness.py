# src/cli/renderers/render_witness.py
from rich.table import Table

from src.cli.renderers.make_table import make_table
from src.cli.renderers.render_check import check_rows
from src.documents.report_documents import WitnessDocument


def render_witness(document: WitnessDocument) -> list[Table]:
    table = make_table(f"🎯 証人ペアの探索 ({document.mode})", "項目", "値")
    table.add_row("N", ", ".join(document.subset))
    table.add_row("ε", document.epsilon)
    if document.check is None:
        table.add_row("結果", "❌ 証人ペアはありません")
    else:
        check_rows(table, document.check)
    return [table]
