# src/construction/extract_witness_pair.py
from fractions import Fraction

from src.core.errors import InternalInvariantError, PreconditionError
from src.core.models import LipschitzFunction, PointId, PointedMetricSpace
from src.core.rationals import Rational, as_rational
from src.freespace.lip_norm import lip_norm


def extract_witness_pair(space: PointedMetricSpace, g: LipschitzFunction, alpha: Rational) -> tuple[PointId, PointId]:
    """(g(u) - g(v)) / d(u, v) ≥ 1-α となる順序対のうち辞書式で最初のもの"""
    a = as_rational(alpha, "alpha")
    if not (0 < a < 1):
        raise PreconditionError(f"α は (0, 1) の範囲で指定してください: {a}")
    norm = lip_norm(space, g).value
    if norm < 1 - a:
        raise PreconditionError(f"‖g‖ = {norm} が 1-α = {1 - a} を下回っています")

    threshold: Fraction = 1 - a
    for u in space.points:
        for v in space.points:
            if u != v and (g(u) - g(v)) / space.d(u, v) >= threshold:
                return u, v
    raise InternalInvariantError("ノルムを達成するペアが見つかりません")
