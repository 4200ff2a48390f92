# src/cli/run.py
from typing import Callable

from loguru import logger

from src.cli.commands.run_construct import run_construct
from src.cli.commands.run_example import run_example
from src.cli.commands.run_molecule_norm import run_molecule_norm
from src.cli.commands.run_trapezoid import run_trapezoid
from src.cli.commands.run_validate import run_validate
from src.cli.constants.exit_codes import EXIT_INTERNAL, EXIT_USAGE
from src.cli.models.invocation import Invocation, RunResult
from src.core.errors import DocumentError, InternalInvariantError, SltpLabError
from src.documents.report_documents import ErrorDocument

COMMANDS: dict[str, Callable[[Invocation], RunResult]] = {
    "validate": run_validate,
    "example": run_example,
    "check-ltp": run_trapezoid,
    "check-sltp": run_trapezoid,
    "scan": run_trapezoid,
    "witness": run_trapezoid,
    "molecule-norm": run_molecule_norm,
    "construct": run_construct,
}


def run(invocation: Invocation) -> RunResult:
    """
    サブコマンドを実行し、終了コードと出力ドキュメントを返す
    入力・使い方の誤りは 2、不変条件の破れは 3 に対応づけ、どちらもエラードキュメントを返します。
    """
    try:
        return COMMANDS[invocation.subcommand](invocation)
    except InternalInvariantError as e:
        logger.error(f"[{invocation.subcommand}] 内部の不変条件が崩れました: {e}")
        return RunResult(EXIT_INTERNAL, ErrorDocument(error=type(e).__name__, message=str(e)))
    except SltpLabError as e:
        location = e.location if isinstance(e, DocumentError) else ""
        logger.error(f"[{invocation.subcommand}] {type(e).__name__}: {e}")
        return RunResult(EXIT_USAGE, ErrorDocument(error=type(e).__name__, message=str(e), location=location))
