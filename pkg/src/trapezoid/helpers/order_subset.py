# src/trapezoid/helpers/order_subset.py
from typing import Iterable

from src.core.errors import PreconditionError
from src.core.models import PointId, PointedMetricSpace


def order_subset(space: PointedMetricSpace, subset: Iterable[PointId]) -> list[PointId]:
    ordered = sorted({space.require(p) for p in subset})
    if not ordered:
        raise PreconditionError("部分集合 N が空です")
    return ordered
