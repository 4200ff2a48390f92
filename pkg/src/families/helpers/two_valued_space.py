# src/families/helpers/two_valued_space.py
from typing import Callable, Sequence

from src.core.models import PointedMetricSpace
from src.metric.build_from_matrix import build_from_matrix


def two_valued_space(
        names: Sequence[str],
        is_near: Callable[[str, str], bool],
) -> PointedMetricSpace:
    """距離が 1 か 2 だけの空間（この種の対称な表は常に距離になる）。基点は先頭の点です。"""
    matrix = [
        [0 if p == q else (1 if is_near(p, q) or is_near(q, p) else 2) for q in names]
        for p in names
    ]
    return build_from_matrix(names, names[0], matrix)
