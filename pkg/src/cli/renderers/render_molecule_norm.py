# src/cli/renderers/render_molecule_norm.py
from rich.table import Table

from src.cli.renderers.make_table import make_table
from src.documents.report_documents import MoleculeNormDocument


def render_molecule_norm(document: MoleculeNormDocument) -> list[Table]:
    summary = make_table("📦 分子のノルム", "項目", "値")
    summary.add_row("μ", " + ".join(f"({t.coeff})·δ_{t.point}" for t in document.terms))
    summary.add_row("‖μ‖", document.norm)

    optimizer = make_table("双対最適解 f*", "点", "f*(点)")
    for name, value in document.optimizer.items():
        optimizer.add_row(name, value)
    return [summary, optimizer]
