# src/cli/renderers/make_table.py
from rich import box
from rich.table import Table


def make_table(title: str, *columns: str) -> Table:
    table = Table(
        title=title,
        show_header=True,
        header_style="bold magenta",
        box=box.SQUARE
    )
    for i, column in enumerate(columns):
        table.add_column(column, style="cyan" if i == 0 else "white", no_wrap=i == 0)
    return table


def verdict_mark(ok: bool) -> str:
    return "✅ 成立" if ok else "❌ 不成立"
