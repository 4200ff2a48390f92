# src/trapezoid/find_witness.py
from loguru import logger

from src.core.models import PointedMetricSpace
from src.trapezoid.check_ineq_ltp import check_ineq_ltp
from src.trapezoid.check_sltp import check_sltp
from src.trapezoid.constants.modes import Mode
from src.trapezoid.models.witness_query import WitnessQuery, WitnessResult


def find_witness(space: PointedMetricSpace, query: WitnessQuery, mode: Mode = "sltp") -> WitnessResult:
    """候補ペアを (index(u), index(v)) の辞書式順に調べ、最初に判定が通ったペアを返す"""
    check = check_sltp if mode == "sltp" else check_ineq_ltp
    for u, v in query.candidate_pairs(space):
        result = check(space, query.subset, query.epsilon, u, v)
        if result.holds:
            logger.debug(f"[witness] {mode}: ε={query.epsilon} で証人ペア ({u}, {v}) が見つかりました")
            return WitnessResult(pair=(u, v), check=result)

    logger.debug(f"[witness] {mode}: ε={query.epsilon} を満たすペアはありません")
    return WitnessResult(pair=None, check=None)
