# src/metric/scale_space.py
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.models import PointedMetricSpace


def scale_space(space: PointedMetricSpace, t: Fraction) -> PointedMetricSpace:
    if t <= 0:
        raise PreconditionError(f"倍率は正の有理数で指定してください: {t}")
    return PointedMetricSpace(
        points=space.points,
        dist=tuple(tuple(t * value for value in row) for row in space.dist),
        base=space.base,
    )
