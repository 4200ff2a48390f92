# src/trapezoid/check_sltp.py
from dataclasses import replace
from typing import Iterable

from src.core.models import PointId, PointedMetricSpace
from src.core.rationals import Rational
from src.trapezoid.check_ineq_ltp import check_ineq_ltp
from src.trapezoid.check_ineq_sym import check_ineq_sym
from src.trapezoid.models.trapezoid_check import TrapezoidCheck


def check_sltp(
        space: PointedMetricSpace,
        subset: Iterable[PointId],
        epsilon: Rational,
        u: PointId,
        v: PointId,
) -> TrapezoidCheck:
    """両方の不等式の連言。slack は小さい方で、最悪のタプルもそちら（同じなら台形不等式側）から取ります。"""
    subset = list(subset)
    ltp = check_ineq_ltp(space, subset, epsilon, u, v)
    sym = check_ineq_sym(space, subset, epsilon, u, v)
    binding = sym if sym.slack < ltp.slack else ltp
    return replace(binding, combined=True)
