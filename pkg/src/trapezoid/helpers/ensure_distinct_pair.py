# src/trapezoid/helpers/ensure_distinct_pair.py
from src.core.errors import PreconditionError
from src.core.models import PointId, PointedMetricSpace


def ensure_distinct_pair(space: PointedMetricSpace, u: PointId, v: PointId) -> None:
    space.require(u)
    space.require(v)
    if u == v:
        raise PreconditionError(f"u と v は相異なる点である必要があります: {u}")
