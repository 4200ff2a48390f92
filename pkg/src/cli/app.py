# src/cli/app.py
from typing import Optional

import typer
from pydantic import ValidationError

from src.cli.models.invocation import Invocation, RunResult
from src.cli.renderers.render_document import render_document
from src.cli.run import run
from src.core.settings import get_settings
from src.utils.logger import console, setup_logger

app = typer.Typer(
    name="sltplab",
    help=(
        "有限の基点付き距離空間で台形性 (LTP / SLTP) を判定し、対称な証人関数を構成します。\n\n"
        "終了コード: 0=成立・発見・構成成功, 1=否定的な結果, 2=入力・使い方の誤り, 3=内部エラー"
    ),
    add_completion=False,
    no_args_is_help=True,
)

SPACE_ARGUMENT = typer.Argument("-", help="空間ファイル（JSON）。- は標準入力")
SUBSET_OPTION = typer.Option(None, "--subset", help="N の点（カンマ区切り）")
EPS_OPTION = typer.Option(None, "--eps", help="ε（\"1/10\" のような有理数）")
FORMAT_OPTION = typer.Option(None, "--format", help="human / machine（既定は SLTP_OUTPUT_FORMAT）")


def _emit(result: RunResult, output_format: str) -> None:
    renderables = render_document(result.document) if output_format == "human" else None
    if renderables is None:
        typer.echo(result.document.model_dump_json(indent=2))
    else:
        for renderable in renderables:
            console.print(renderable)
    raise typer.Exit(code=result.exit_code)


def _invoke(subcommand: str, output_format: Optional[str], **options) -> None:
    fmt = output_format or get_settings().output_format
    if fmt not in ("human", "machine"):
        raise typer.BadParameter(f"--format は human か machine です: {fmt}")
    try:
        invocation = Invocation(subcommand=subcommand, output_format=fmt, **options)
    except ValidationError as e:
        raise typer.BadParameter(str(e)) from None
    _emit(run(invocation), fmt)


@app.callback()
def main() -> None:
    """SLTPLab"""
    setup_logger(get_settings())


@app.command()
def validate(space: str = SPACE_ARGUMENT, output_format: Optional[str] = FORMAT_OPTION) -> None:
    """空間が距離の公理を満たすか確認する"""
    _invoke("validate", output_format, space=space)


@app.command()
def example(
        family: str = typer.Argument(..., help="ex1 / ex2 / l1_basis / random_graph_metric / random_l1_cloud"),
        k: Optional[int] = typer.Option(None, "--k", help="ex1 / ex2 の k"),
        m: Optional[int] = typer.Option(None, "--m", help="l1_basis の m"),
        n: Optional[int] = typer.Option(None, "--n", help="ランダムな族の点の数"),
        seed: int = typer.Option(0, "--seed", help="乱数シード"),
) -> None:
    """族の空間を生成し、空間ファイル（JSON）として出力する"""
    _invoke("example", "machine", family=family, k=k, m=m, n=n, seed=seed)


def _trapezoid_command(subcommand: str):
    def command(
            space: str = SPACE_ARGUMENT,
            subset: Optional[str] = SUBSET_OPTION,
            eps: Optional[str] = EPS_OPTION,
            pair: Optional[str] = typer.Option(None, "--pair", help="判定するペア u,v"),
            scan: bool = typer.Option(False, "--scan", help="全ペアをスキャンする"),
            output_format: Optional[str] = FORMAT_OPTION,
    ) -> None:
        _invoke(subcommand, output_format, space=space, subset=subset, eps=eps, pair=pair, scan=scan)

    return command


app.command("check-ltp", help="台形不等式を判定する（--pair / --scan / 証人探し）")(_trapezoid_command("check-ltp"))
app.command("check-sltp", help="両方の不等式を判定する（--pair / --scan / 証人探し）")(_trapezoid_command("check-sltp"))


@app.command()
def scan(
        space: str = SPACE_ARGUMENT,
        subset: Optional[str] = SUBSET_OPTION,
        eps: Optional[str] = EPS_OPTION,
        mode: str = typer.Option("sltp", "--mode", help="ltp / sltp"),
        output_format: Optional[str] = FORMAT_OPTION,
) -> None:
    """すべてのペアを調べ、反例の全体像と必要な ε を報告する"""
    _invoke("scan", output_format, space=space, subset=subset, eps=eps, mode=mode)


@app.command()
def witness(
        space: str = SPACE_ARGUMENT,
        subset: Optional[str] = SUBSET_OPTION,
        eps: Optional[str] = EPS_OPTION,
        mode: str = typer.Option("sltp", "--mode", help="ltp / sltp"),
        output_format: Optional[str] = FORMAT_OPTION,
) -> None:
    """辞書式で最初の証人ペアを探す"""
    _invoke("witness", output_format, space=space, subset=subset, eps=eps, mode=mode)


@app.command("molecule-norm")
def molecule_norm(
        space: str = SPACE_ARGUMENT,
        molecule: Optional[str] = typer.Option(None, "--molecule", help="分子ファイル（JSON）"),
        output_format: Optional[str] = FORMAT_OPTION,
) -> None:
    """分子の自由空間ノルムと双対最適解を計算する"""
    _invoke("molecule-norm", output_format, space=space, molecule=molecule)


@app.command()
def construct(
        space: str = SPACE_ARGUMENT,
        slices: Optional[str] = typer.Option(None, "--slices", help="スライスファイル（JSON）"),
        eps: Optional[str] = EPS_OPTION,
        alpha: Optional[str] = typer.Option(None, "--alpha", help="alpha を省いたスライスの幅（既定 1/2）"),
        output_format: Optional[str] = FORMAT_OPTION,
) -> None:
    """スライスに対する対称な証人関数 f_i, g を構成して検証する"""
    _invoke("construct", output_format, space=space, slices=slices, eps=eps, alpha=alpha)
