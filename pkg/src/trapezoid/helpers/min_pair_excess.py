# src/trapezoid/helpers/min_pair_excess.py
from fractions import Fraction
from typing import Sequence

from src.core.models import PointId, PointedMetricSpace


def min_pair_excess(
        space: PointedMetricSpace,
        subset: Sequence[PointId],
        center: PointId,
        k: Fraction,
) -> tuple[Fraction, tuple[PointId, PointId]]:
    """
    min_{(x,y) ∈ N²} d(x,c) + d(y,c) - k·d(x,y) と、辞書式で最初の最小化ペア
    対称版の不等式は u 側と v 側の 2 項に分かれるので、各側をこれで独立に最小化できます。
    subset は index 順に並んでいる前提です。
    """
    best: Fraction | None = None
    best_pair = (subset[0], subset[0])
    for x in subset:
        dx = space.d(x, center)
        for y in subset:
            value = dx + space.d(y, center) - k * space.d(x, y)
            if best is None or value < best:
                best, best_pair = value, (x, y)
    return best, best_pair
