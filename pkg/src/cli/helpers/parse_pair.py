# src/cli/helpers/parse_pair.py
from src.core.errors import UsageError
from src.core.models import PointId, PointedMetricSpace


def parse_pair(space: PointedMetricSpace, text: str) -> tuple[PointId, PointId]:
    names = [name.strip() for name in text.split(",")]
    if len(names) != 2 or not all(names):
        raise UsageError(f"--pair は u,v の形で指定してください: {text}")
    u, v = space.points_named(names)
    return u, v
