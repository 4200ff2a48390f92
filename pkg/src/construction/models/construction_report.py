# src/construction/models/construction_report.py
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from src.construction.models.admissible_interval import AdmissibleInterval
from src.construction.models.radii_bundle import RadiiBundle
from src.core.models import LipschitzFunction, PointId, WeakStarSlice
from src.freespace.models.results import SliceMembership


class ConstructionStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    WITNESS_UNAVAILABLE = "witness_unavailable"


@dataclass(frozen=True)
class SliceConstruction:
    """
    スライス 1 枚ぶんの構成結果
    plus_membership / minus_membership（f ± g がスライスに入るか）は参考情報で、合否には使いません。
    """
    slice: WeakStarSlice
    h: LipschitzFunction
    interval: AdmissibleInterval
    c: Fraction
    f: LipschitzFunction
    f_norm: Fraction
    f_plus_g_norm: Fraction
    f_minus_g_norm: Fraction
    membership: SliceMembership
    plus_membership: SliceMembership
    minus_membership: SliceMembership

    @property
    def passed(self) -> bool:
        return (
            self.f_norm <= 1
            and self.membership == SliceMembership.INSIDE
            and self.f_plus_g_norm <= 1
            and self.f_minus_g_norm <= 1
        )


@dataclass(frozen=True)
class ConstructionReport:
    status: ConstructionStatus
    epsilon: Fraction
    subset: tuple[PointId, ...]
    pair: tuple[PointId, PointId] | None = None
    radii: RadiiBundle | None = None
    g: LipschitzFunction | None = None
    g_norm: Fraction | None = None
    slices: tuple[SliceConstruction, ...] = field(default=())
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.status == ConstructionStatus.PASSED
