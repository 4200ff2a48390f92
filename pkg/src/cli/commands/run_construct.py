# src/cli/commands/run_construct.py
from src.cli.constants.exit_codes import EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK
from src.cli.helpers.load_space_input import load_space_input
from src.cli.helpers.require_option import require_option
from src.cli.models.invocation import Invocation, RunResult
from src.construction.build_symmetric_witnesses import build_symmetric_witnesses
from src.construction.models.construction_report import ConstructionStatus
from src.core.rationals import as_rational
from src.documents.load_document import load_document
from src.documents.molecule_document import SlicesDocument
from src.documents.report_documents import ConstructionDocument
from src.freespace.make_slice import make_slice

STATUS_EXIT_CODES: dict[ConstructionStatus, int] = {
    ConstructionStatus.PASSED: EXIT_OK,
    ConstructionStatus.WITNESS_UNAVAILABLE: EXIT_NEGATIVE,
    ConstructionStatus.FAILED: EXIT_INTERNAL,
}


def run_construct(invocation: Invocation) -> RunResult:
    path = require_option(invocation.slices, "--slices", "construct")
    eps = as_rational(require_option(invocation.eps, "--eps", "construct"), "--eps")
    space, _ = load_space_input(invocation.space)

    # --alpha はファイルで alpha を省いたスライスの既定値
    default_alpha = as_rational(invocation.alpha or "1/2", "--alpha")
    slices = [
        make_slice(space, item.to_molecule(space), item.alpha_value(default_alpha))
        for item in load_document(path, SlicesDocument).slices
    ]
    report = build_symmetric_witnesses(space, slices, eps)
    return RunResult(STATUS_EXIT_CODES[report.status], ConstructionDocument.from_report(report))
