# src/trapezoid/models/scan_report.py
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from src.core.models import PointId
from src.trapezoid.constants.modes import Mode
from src.trapezoid.models.trapezoid_check import RequiredEpsilon, TrapezoidCheck

Pair = tuple[PointId, PointId]


@dataclass(frozen=True)
class ScanVerdict:
    kind: Literal["witness_found", "all_pairs_fail"]
    # witness_found なら証人ペア、all_pairs_fail なら必要な ε が最小になるペア
    pair: Pair | None
    min_required_epsilon: Fraction


@dataclass(frozen=True)
class ScanReport:
    mode: Mode
    epsilon: Fraction
    subset: tuple[PointId, ...]
    results: dict[Pair, TrapezoidCheck]
    required: dict[Pair, RequiredEpsilon]
    verdict: ScanVerdict
    assumptions: tuple[str, ...] = field(default=())
    # sltp のときだけ: ペアごとの対称版の不等式の判定
    sym_checks: dict[Pair, TrapezoidCheck] = field(default_factory=dict)
