# src/cli/commands/run_example.py
from src.cli.constants.exit_codes import EXIT_OK
from src.cli.helpers.require_option import require_option
from src.cli.models.invocation import Invocation, RunResult
from src.core.errors import UsageError
from src.documents.space_document import SpaceDocument
from src.families.gen_family import gen_family
from src.families.models.family_spec import FamilySpec

# 族ごとの大きさのオプション
SIZE_FLAGS: dict[str, str] = {
    "ex1": "k",
    "ex2": "k",
    "l1_basis": "m",
    "random_graph_metric": "n",
    "random_l1_cloud": "n",
}


def run_example(invocation: Invocation) -> RunResult:
    family = require_option(invocation.family, "FAMILY", "example")
    if family not in SIZE_FLAGS:
        raise UsageError(f"不明な族です: {family}（{', '.join(SIZE_FLAGS)} から選んでください）")

    flag = SIZE_FLAGS[family]
    size = require_option(getattr(invocation, flag), f"--{flag}", f"example {family}")
    if size < 1:
        raise UsageError(f"--{flag} は 1 以上で指定してください: {size}")

    spec = FamilySpec(family=family, size=size, seed=invocation.seed)
    return RunResult(EXIT_OK, SpaceDocument.from_space(gen_family(spec), family=spec))
