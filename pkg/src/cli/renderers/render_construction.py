# src/cli/renderers/render_construction.py
from rich.table import Table

from src.cli.renderers.make_table import make_table, verdict_mark
from src.documents.report_documents import ConstructionDocument


def render_construction(document: ConstructionDocument) -> list[Table]:
    summary = make_table("🛠 対称な証人関数の構成", "項目", "値")
    summary.add_row("状態", document.status)
    summary.add_row("N", ", ".join(document.subset))
    summary.add_row("ε", document.epsilon)
    if document.radii is not None:
        radii = document.radii
        summary.add_row("ペア (u, v)", f"({radii.u}, {radii.v})")
        summary.add_row("r0 / s0", f"{radii.r0} / {radii.s0}")
        summary.add_row("r / s", f"{radii.r} / {radii.s}")
        summary.add_row("‖g‖", document.g_norm)
    for message in document.diagnostics:
        summary.add_row("診断", message)
    if not document.slices:
        return [summary]

    slices = make_table("スライスごとの検証", "#", "c", "‖f‖", "f ∈ S", "‖f+g‖", "‖f-g‖", "f±g ∈ S (参考)", "合否")
    for i, item in enumerate(document.slices):
        slices.add_row(
            str(i),
            item.c,
            item.f_norm,
            item.membership,
            item.f_plus_g_norm,
            item.f_minus_g_norm,
            f"{item.plus_membership} / {item.minus_membership}",
            verdict_mark(item.passed),
        )
    return [summary, slices]
