# src/cli/helpers/parse_subset.py
from src.core.errors import UsageError
from src.core.models import PointId, PointedMetricSpace


def parse_subset(space: PointedMetricSpace, text: str) -> list[PointId]:
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise UsageError("--subset に点の名前がありません")
    return space.points_named(names)
