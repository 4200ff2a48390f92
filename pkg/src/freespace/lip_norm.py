# src/freespace/lip_norm.py
from fractions import Fraction

from src.core.models import LipschitzFunction, PartialFunction, PointedMetricSpace
from src.freespace.models.results import LipschitzConstant


def lip_norm(space: PointedMetricSpace, f: LipschitzFunction | PartialFunction) -> LipschitzConstant:
    """
    定義域内の相異なる 2 点について |f(p) - f(q)| / d(p, q) の最大値
    定義域が 1 点以下なら 0 です。
    """
    domain = sorted(f.values)
    best = Fraction(0)
    best_pair = None
    for k, p in enumerate(domain):
        for q in domain[k + 1:]:
            quotient = abs(f(p) - f(q)) / space.d(p, q)
            if best_pair is None or quotient > best:
                best, best_pair = quotient, (p, q)
    return LipschitzConstant(best, best_pair)
