# src/metric/helpers/make_points.py
from collections import Counter
from typing import Sequence

from src.core.errors import StructuralError
from src.core.models import PointId


def make_points(names: Sequence[str], base: str) -> tuple[tuple[PointId, ...], PointId]:
    """ラベル列から PointId を採番し、基点を引き当てる"""
    names = [str(name) for name in names]
    if not names:
        raise StructuralError("点が 1 つもありません")

    duplicated = sorted(name for name, count in Counter(names).items() if count > 1)
    if duplicated:
        raise StructuralError(f"点の名前が重複しています: {', '.join(duplicated)}")

    points = tuple(PointId(name, i) for i, name in enumerate(names))
    for p in points:
        if p.name == str(base):
            return points, p
    raise StructuralError(f"基点 {base} が点の一覧にありません")
