# src/cli/renderers/render_scan.py
from rich.table import Table

from src.cli.renderers.make_table import make_table, verdict_mark
from src.documents.report_documents import ScanDocument


def render_scan(document: ScanDocument) -> list[Table]:
    summary = make_table(f"🔍 全ペアのスキャン ({document.mode})", "項目", "値")
    summary.add_row("N", ", ".join(document.subset))
    summary.add_row("ε", document.epsilon)
    summary.add_row("ペア数", str(len(document.pairs)))
    summary.add_row("結論", document.verdict.kind)
    if document.verdict.pair:
        summary.add_row("ペア", f"({', '.join(document.verdict.pair)})")
    summary.add_row("必要な ε の最小値", document.verdict.min_required_epsilon)
    for flag in document.assumptions:
        summary.add_row("前提", flag)

    pairs = make_table("ペアごとの結果", "ペア", "判定", "最悪のタプル", "slack", "対称版 (左辺 : 右辺)", "必要な ε (ltp / sltp)")
    for item in document.pairs:
        check = item.check
        sym = item.sym_check
        pairs.add_row(
            f"({check.u}, {check.v})",
            verdict_mark(check.holds),
            ", ".join(check.worst_tuple),
            check.slack,
            "-" if sym is None else f"{sym.lhs} : {sym.rhs} ({', '.join(sym.worst_tuple)})",
            f"{item.eps_ltp} / {item.eps_sltp}",
        )
    return [summary, pairs]
