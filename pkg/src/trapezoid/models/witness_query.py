# src/trapezoid/models/witness_query.py
from dataclasses import dataclass
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.models import PointId, PointedMetricSpace
from src.trapezoid.models.trapezoid_check import TrapezoidCheck


@dataclass(frozen=True)
class WitnessQuery:
    """
    証人ペアの探索条件
    candidates が None なら空間のすべての非順序ペアを候補にします。
    """
    subset: tuple[PointId, ...]
    epsilon: Fraction
    candidates: tuple[tuple[PointId, PointId], ...] | None = None

    def __post_init__(self):
        if not self.subset:
            raise PreconditionError("部分集合 N が空です")
        if not (0 <= self.epsilon < 1):
            raise PreconditionError(f"ε は [0, 1) の範囲で指定してください: {self.epsilon}")

    def candidate_pairs(self, space: PointedMetricSpace) -> list[tuple[PointId, PointId]]:
        """(index の小さい点, 大きい点) に正規化し、辞書式順に並べた候補"""
        if self.candidates is None:
            return list(space.pairs())
        normalized = set()
        for u, v in self.candidates:
            space.require(u)
            space.require(v)
            if u == v:
                raise PreconditionError(f"候補ペアの 2 点が同じです: {u}")
            normalized.add((u, v) if u.index < v.index else (v, u))
        return sorted(normalized, key=lambda pair: (pair[0].index, pair[1].index))


@dataclass(frozen=True)
class WitnessResult:
    pair: tuple[PointId, PointId] | None
    check: TrapezoidCheck | None

    @property
    def found(self) -> bool:
        return self.pair is not None
