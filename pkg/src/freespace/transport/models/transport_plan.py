# src/freespace/transport/models/transport_plan.py
from dataclasses import dataclass
from fractions import Fraction

Cell = tuple[int, int]


@dataclass(frozen=True)
class TransportPlan:
    """
    輸送問題の最適基底解
    basis は全域木をなす m+n-1 個のセル（流量 0 の退化セルを含む）です。
    """
    flows: dict[Cell, Fraction]
    cost: Fraction
    row_potentials: tuple[Fraction, ...]
    column_potentials: tuple[Fraction, ...]
    pivots: int

    @property
    def basis(self) -> list[Cell]:
        return sorted(self.flows)
