# src/cli/commands/run_validate.py
from src.cli.constants.exit_codes import EXIT_NEGATIVE, EXIT_OK
from src.cli.helpers.load_space_input import load_space_input
from src.cli.models.invocation import Invocation, RunResult
from src.documents.report_documents import ValidationDocument
from src.metric.validate_metric import validate_metric


def run_validate(invocation: Invocation) -> RunResult:
    space, _ = load_space_input(invocation.space)
    report = validate_metric(space)
    return RunResult(EXIT_OK if report.ok else EXIT_NEGATIVE, ValidationDocument.from_report(report))
