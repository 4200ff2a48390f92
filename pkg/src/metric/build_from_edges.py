# src/metric/build_from_edges.py
from fractions import Fraction
from typing import Iterable, Sequence

from src.core.errors import StructuralError
from src.core.models import PointedMetricSpace
from src.core.rationals import Rational, as_rational
from src.metric.helpers.make_points import make_points


def build_from_edges(
        names: Sequence[str],
        base: str,
        edges: Iterable[tuple[str, str, Rational]],
) -> PointedMetricSpace:
    """
    辺のリスト {a, b, d} から距離行列を組み立てる
    非順序ペアはちょうど 1 回ずつ現れる必要があります（補完はしません）。
    """
    points, base_point = make_points(names, base)
    index = {p.name: p.index for p in points}
    n = len(points)
    matrix: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = Fraction(0)

    for k, (a, b, d) in enumerate(edges):
        if a not in index or b not in index:
            unknown = a if a not in index else b
            raise StructuralError(f"edges[{k}]: 存在しない点です: {unknown}")
        i, j = index[a], index[b]
        if i == j:
            raise StructuralError(f"edges[{k}]: 同じ点どうしの辺は指定できません: {a}")
        if matrix[i][j] is not None:
            raise StructuralError(f"edges[{k}]: ペア ({a}, {b}) が重複しています")
        value = as_rational(d, f"edges[{k}].d")
        matrix[i][j] = matrix[j][i] = value

    missing = [
        f"({points[i].name}, {points[j].name})"
        for i in range(n) for j in range(i + 1, n)
        if matrix[i][j] is None
    ]
    if missing:
        raise StructuralError(f"距離が与えられていないペアがあります: {', '.join(missing)}")

    return PointedMetricSpace(
        points=points,
        dist=tuple(tuple(row) for row in matrix),
        base=base_point,
    )
