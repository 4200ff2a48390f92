# src/cli/commands/run_trapezoid.py
from loguru import logger

from src.cli.constants.exit_codes import EXIT_NEGATIVE, EXIT_OK
from src.cli.helpers.load_space_input import load_space_input
from src.cli.helpers.parse_pair import parse_pair
from src.cli.helpers.parse_subset import parse_subset
from src.cli.helpers.require_option import require_option
from src.cli.models.invocation import Invocation, RunResult
from src.core.errors import UsageError
from src.documents.report_documents import CheckDocument, ScanDocument, WitnessDocument
from src.families.truncation_assumption import truncation_assumption
from src.metric.validate_metric import validate_metric
from src.trapezoid.check_ineq_ltp import check_ineq_ltp
from src.trapezoid.check_sltp import check_sltp
from src.trapezoid.counterexample_scan import counterexample_scan
from src.trapezoid.find_witness import find_witness
from src.trapezoid.helpers.as_epsilon import as_epsilon
from src.trapezoid.models.witness_query import WitnessQuery


def _mode_of(invocation: Invocation) -> str:
    match invocation.subcommand:
        case "check-ltp":
            return "ltp"
        case "check-sltp":
            return "sltp"
        case _:
            return invocation.mode


def run_trapezoid(invocation: Invocation) -> RunResult:
    """
    check-ltp / check-sltp / scan / witness
    check-* は --pair があればそのペアだけ、--scan なら全ペアのスキャン、どちらもなければ証人探しです。
    """
    command = invocation.subcommand
    subset_text = require_option(invocation.subset, "--subset", command)
    eps = as_epsilon(require_option(invocation.eps, "--eps", command))
    if invocation.pair is not None and invocation.scan:
        raise UsageError("--pair と --scan は同時に指定できません")

    space, document = load_space_input(invocation.space)
    if not validate_metric(space).ok:
        logger.warning(f"[{command}] 入力は距離空間ではありません（validate で詳細を確認できます）")
    subset = parse_subset(space, subset_text)
    mode = _mode_of(invocation)

    if command == "scan" or invocation.scan:
        assumptions = []
        if document.family is not None:
            flag = truncation_assumption(document.family, [p.name for p in subset])
            if flag is not None:
                assumptions.append(flag)
        report = counterexample_scan(space, subset, eps, mode, assumptions)
        code = EXIT_OK if report.verdict.kind == "witness_found" else EXIT_NEGATIVE
        return RunResult(code, ScanDocument.from_report(report))

    if command != "witness" and invocation.pair is not None:
        u, v = parse_pair(space, invocation.pair)
        check = check_sltp(space, subset, eps, u, v) if mode == "sltp" else check_ineq_ltp(space, subset, eps, u, v)
        return RunResult(EXIT_OK if check.holds else EXIT_NEGATIVE, CheckDocument.from_check(check))

    query = WitnessQuery(subset=tuple(sorted(set(subset))), epsilon=eps)
    result = find_witness(space, query, mode)
    document = WitnessDocument.from_result(result, mode, eps, query.subset)
    return RunResult(EXIT_OK if result.found else EXIT_NEGATIVE, document)
