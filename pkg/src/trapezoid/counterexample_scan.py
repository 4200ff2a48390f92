# src/trapezoid/counterexample_scan.py
from typing import Iterable, Sequence

from loguru import logger

from src.core.models import PointId, PointedMetricSpace
from src.core.rationals import Rational
from src.trapezoid.check_ineq_ltp import check_ineq_ltp
from src.trapezoid.check_ineq_sym import check_ineq_sym
from src.trapezoid.check_sltp import check_sltp
from src.trapezoid.constants.modes import Mode
from src.trapezoid.helpers.as_epsilon import as_epsilon
from src.trapezoid.helpers.order_subset import order_subset
from src.trapezoid.models.scan_report import ScanReport, ScanVerdict
from src.trapezoid.required_epsilon import required_epsilon


def counterexample_scan(
        space: PointedMetricSpace,
        subset: Iterable[PointId],
        epsilon: Rational,
        mode: Mode = "sltp",
        assumptions: Sequence[str] = (),
) -> ScanReport:
    """
    空間のすべての非順序ペアについて判定と必要な ε を記録する
    1 つでも通れば witness_found（辞書式で最初のペア）、全滅なら必要な ε の最小値を付けて all_pairs_fail です。
    sltp では判定を決めた側とは別に、対称版の不等式の最悪の 4 つ組も全ペアで残します。
    """
    eps = as_epsilon(epsilon)
    nodes = order_subset(space, subset)
    check = check_sltp if mode == "sltp" else check_ineq_ltp

    results = {}
    sym_checks = {}
    required = {}
    for u, v in space.pairs():
        results[(u, v)] = check(space, nodes, eps, u, v)
        if mode == "sltp":
            sym_checks[(u, v)] = check_ineq_sym(space, nodes, eps, u, v)
        required[(u, v)] = required_epsilon(space, nodes, u, v)

    def needed(pair):
        return required[pair].eps_sltp if mode == "sltp" else required[pair].eps_ltp

    passing = [pair for pair, result in results.items() if result.holds]
    min_pair = min(results, key=needed)
    if passing:
        verdict = ScanVerdict(kind="witness_found", pair=passing[0], min_required_epsilon=needed(min_pair))
    else:
        verdict = ScanVerdict(kind="all_pairs_fail", pair=min_pair, min_required_epsilon=needed(min_pair))

    logger.info(
        f"[scan] {mode} ε={eps} |N|={len(nodes)} ペア数={len(results)}: "
        f"{verdict.kind} (必要な ε の最小値 {verdict.min_required_epsilon})"
    )
    return ScanReport(
        mode=mode,
        epsilon=eps,
        subset=tuple(nodes),
        results=results,
        required=required,
        verdict=verdict,
        assumptions=tuple(assumptions),
        sym_checks=sym_checks,
    )
