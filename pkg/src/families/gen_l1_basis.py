# src/families/gen_l1_basis.py
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.models import PointedMetricSpace
from src.metric.build_from_l1_vectors import build_from_l1_vectors

# ℓ₁ 基底の族が一様離散かつ有界であることを示す定数 (r < d(x, y) < R)
L1_BASIS_LOWER: Fraction = Fraction(1, 2)
L1_BASIS_UPPER: Fraction = Fraction(5, 2)


def l1_basis_vectors(m: int) -> list[tuple[str, list[Fraction]]]:
    """原点 "0" と標準基底 e1..em"""
    if m < 2:
        raise PreconditionError(f"m は 2 以上で指定してください: {m}")
    vectors = [("0", [Fraction(0)] * m)]
    for i in range(1, m + 1):
        vectors.append((f"e{i}", [Fraction(int(j == i - 1)) for j in range(m)]))
    return vectors


def gen_l1_basis(m: int) -> PointedMetricSpace:
    return build_from_l1_vectors(l1_basis_vectors(m), "0")
