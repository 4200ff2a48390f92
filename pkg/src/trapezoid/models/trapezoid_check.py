# src/trapezoid/models/trapezoid_check.py
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from src.core.models import PointId
from src.trapezoid.constants.modes import Inequality


@dataclass(frozen=True)
class TrapezoidCheck:
    """
    1 つのペア (u, v) に対する判定結果
    slack = rhs - (1-ε)·lhs を最悪のタプルで評価した値で、holds ⇔ slack ≥ 0 です。
    lhs / rhs は (1-ε) を掛ける前の生の値（レポートで "8 > 4" と出すため）。
    """
    inequality: Inequality
    epsilon: Fraction
    u: PointId
    v: PointId
    worst_tuple: tuple[PointId, ...]
    slack: Fraction
    lhs: Fraction
    rhs: Fraction
    combined: bool = False

    @property
    def holds(self) -> bool:
        return self.slack >= 0


class RequiredEpsilon(NamedTuple):
    eps_ltp: Fraction
    eps_sltp: Fraction
