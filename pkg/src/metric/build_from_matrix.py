# src/metric/build_from_matrix.py
from typing import Sequence

from src.core.errors import StructuralError
from src.core.models import PointedMetricSpace
from src.core.rationals import Rational, as_rational
from src.metric.helpers.make_points import make_points


def build_from_matrix(
        names: Sequence[str],
        base: str,
        dist: Sequence[Sequence[Rational]],
) -> PointedMetricSpace:
    """
    距離行列から空間を組み立てる
    公理のチェックはしません。壊れた入力も中身を調べられるように validate_metric に任せます。
    """
    points, base_point = make_points(names, base)
    n = len(points)

    if len(dist) != n:
        raise StructuralError(f"距離行列の行数 {len(dist)} が点の数 {n} と一致しません")
    for i, row in enumerate(dist):
        if len(row) != n:
            raise StructuralError(f"距離行列の {i} 行目の長さ {len(row)} が点の数 {n} と一致しません")

    matrix = tuple(
        tuple(as_rational(value, f"matrix[{i}][{j}]") for j, value in enumerate(row))
        for i, row in enumerate(dist)
    )
    return PointedMetricSpace(points=points, dist=matrix, base=base_point)
