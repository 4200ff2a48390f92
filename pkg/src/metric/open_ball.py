# src/metric/open_ball.py
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.models import PointId, PointedMetricSpace


def open_ball(space: PointedMetricSpace, center: PointId, radius: Fraction) -> frozenset[PointId]:
    """B(center, radius) = { p : d(p, center) < radius }、半径 0 なら空集合"""
    space.require(center)
    if radius < 0:
        raise PreconditionError(f"半径は 0 以上で指定してください: {radius}")
    return frozenset(p for p in space.points if space.d(p, center) < radius)
