# src/metric/build_from_l1_vectors.py
from fractions import Fraction
from typing import Sequence

from src.core.errors import StructuralError
from src.core.models import PointedMetricSpace
from src.core.rationals import Rational, as_rational
from src.metric.helpers.make_points import make_points


def l1_distance(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum((abs(a - b) for a, b in zip(p, q)), Fraction(0))


def build_from_l1_vectors(
        vectors: Sequence[tuple[str, Sequence[Rational]]],
        base: str,
) -> PointedMetricSpace:
    """ℓ₁ の有限部分集合を距離空間にする（座標の長さが違えば 0 で埋める）"""
    if len(vectors) < 2:
        raise StructuralError("ℓ₁ ベクトルは 2 本以上必要です")

    points, base_point = make_points([label for label, _ in vectors], base)
    width = max(len(coords) for _, coords in vectors)
    padded = [
        tuple(as_rational(c, f"l1.{label}[{i}]") for i, c in enumerate(coords))
        + (Fraction(0),) * (width - len(coords))
        for label, coords in vectors
    ]

    seen: dict[tuple[Fraction, ...], str] = {}
    for (label, _), vector in zip(vectors, padded):
        if vector in seen:
            raise StructuralError(f"同じベクトルが 2 つのラベルに現れています（分離公理に反します）: {seen[vector]}, {label}")
        seen[vector] = label

    matrix = tuple(tuple(l1_distance(p, q) for q in padded) for p in padded)
    return PointedMetricSpace(points=points, dist=matrix, base=base_point)
