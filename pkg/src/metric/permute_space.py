# src/metric/permute_space.py
from typing import Sequence

from src.core.errors import PreconditionError
from src.core.models import PointedMetricSpace
from src.metric.helpers.make_points import make_points


def permute_space(space: PointedMetricSpace, order: Sequence[str]) -> PointedMetricSpace:
    """点の並び順だけを入れ替える（名前・距離・基点は保たれる）"""
    if sorted(order) != sorted(space.names):
        raise PreconditionError("order は空間の点の名前の並べ替えである必要があります")

    old = [space.point(name) for name in order]
    points, base = make_points(order, space.base.name)
    return PointedMetricSpace(
        points=points,
        dist=tuple(tuple(space.d(p, q) for q in old) for p in old),
        base=base,
    )
