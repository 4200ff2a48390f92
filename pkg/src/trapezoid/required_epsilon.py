# src/trapezoid/required_epsilon.py
from fractions import Fraction
from typing import Iterable

from loguru import logger

from src.core.errors import InternalInvariantError
from src.core.models import PointId, PointedMetricSpace
from src.trapezoid.helpers.ensure_distinct_pair import ensure_distinct_pair
from src.trapezoid.helpers.min_pair_excess import min_pair_excess
from src.trapezoid.helpers.order_subset import order_subset
from src.trapezoid.helpers.tuple_slack import ltp_sides, sym_sides
from src.trapezoid.models.trapezoid_check import RequiredEpsilon


def required_epsilon_ltp(space: PointedMetricSpace, nodes: list[PointId], u: PointId, v: PointId) -> Fraction:
    worst = Fraction(0)
    for x in nodes:
        for y in nodes:
            lhs, rhs = ltp_sides(space, u, v, x, y)
            worst = max(worst, 1 - rhs / lhs)
    return worst


def required_epsilon_sym(space: PointedMetricSpace, nodes: list[PointId], u: PointId, v: PointId) -> Fraction:
    """
    λ* = min 右辺/左辺 を Dinkelbach 法で求め、ε* = max(0, 1 - λ*) を返す
    各反復で min (右辺 - λ·左辺) を u 側・v 側に分けて計算し、0 以上になったら λ が最小比です。
    """
    duv = space.d(u, v)
    lhs, rhs = sym_sides(space, u, v, (nodes[0],) * 4)
    ratio = rhs / lhs

    # 比の値は 4 つ組の数しかないので、λ は有限回で止まる
    for _ in range(len(nodes) ** 4 + 1):
        at_u, (x, y) = min_pair_excess(space, nodes, u, ratio)
        at_v, (z, w) = min_pair_excess(space, nodes, v, ratio)
        if at_u + at_v - 2 * ratio * duv >= 0:
            return max(Fraction(0), 1 - ratio)
        lhs, rhs = sym_sides(space, u, v, (x, y, z, w))
        ratio = rhs / lhs

    logger.error(f"[scan] ({u}, {v}) の Dinkelbach 反復が収束しませんでした")
    raise InternalInvariantError("必要な ε の計算が収束しませんでした")


def required_epsilon(
        space: PointedMetricSpace,
        subset: Iterable[PointId],
        u: PointId,
        v: PointId,
) -> RequiredEpsilon:
    """
    ペア (u, v) で各判定が成り立つための最小の ε
    左辺は d(u, v) > 0 を含むので常に正です。check_* は ε ≥ 返り値 のときに限って成り立ちます。
    """
    ensure_distinct_pair(space, u, v)
    nodes = order_subset(space, subset)
    eps_ltp = required_epsilon_ltp(space, nodes, u, v)
    eps_sym = required_epsilon_sym(space, nodes, u, v)
    return RequiredEpsilon(eps_ltp=eps_ltp, eps_sltp=max(eps_ltp, eps_sym))
