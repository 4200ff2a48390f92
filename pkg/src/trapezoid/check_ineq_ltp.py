# src/trapezoid/check_ineq_ltp.py
from typing import Iterable

from src.core.models import PointId, PointedMetricSpace
from src.core.rationals import Rational
from src.trapezoid.helpers.as_epsilon import as_epsilon
from src.trapezoid.helpers.ensure_distinct_pair import ensure_distinct_pair
from src.trapezoid.helpers.order_subset import order_subset
from src.trapezoid.helpers.tuple_slack import ltp_sides
from src.trapezoid.models.trapezoid_check import TrapezoidCheck


def check_ineq_ltp(
        space: PointedMetricSpace,
        subset: Iterable[PointId],
        epsilon: Rational,
        u: PointId,
        v: PointId,
) -> TrapezoidCheck:
    """
    (1-ε)(d(x,y) + d(u,v)) ≤ d(x,u) + d(y,v) を N×N のすべての順序対（x = y を含む）で確かめる
    最悪のタプルは slack 最小のうち辞書式で最初のものです。
    """
    ensure_distinct_pair(space, u, v)
    eps = as_epsilon(epsilon)
    nodes = order_subset(space, subset)

    worst = None
    for x in nodes:
        for y in nodes:
            lhs, rhs = ltp_sides(space, u, v, x, y)
            slack = rhs - (1 - eps) * lhs
            if worst is None or slack < worst[0]:
                worst = (slack, (x, y), lhs, rhs)

    slack, tuple_, lhs, rhs = worst
    return TrapezoidCheck(
        inequality="ltp",
        epsilon=eps,
        u=u,
        v=v,
        worst_tuple=tuple_,
        slack=slack,
        lhs=lhs,
        rhs=rhs,
    )
