# src/trapezoid/check_ineq_sym.py
from typing import Iterable

from src.core.models import PointId, PointedMetricSpace
from src.core.rationals import Rational
from src.trapezoid.helpers.as_epsilon import as_epsilon
from src.trapezoid.helpers.ensure_distinct_pair import ensure_distinct_pair
from src.trapezoid.helpers.min_pair_excess import min_pair_excess
from src.trapezoid.helpers.order_subset import order_subset
from src.trapezoid.helpers.tuple_slack import sym_sides
from src.trapezoid.models.trapezoid_check import TrapezoidCheck


def check_ineq_sym(
        space: PointedMetricSpace,
        subset: Iterable[PointId],
        epsilon: Rational,
        u: PointId,
        v: PointId,
) -> TrapezoidCheck:
    """
    (1-ε)(2d(u,v) + d(x,y) + d(z,w)) ≤ d(x,u) + d(y,u) + d(z,v) + d(w,v) を N⁴ 全体で確かめる

    slack は (x,y) だけに依存する u 側の項と (z,w) だけに依存する v 側の項の和に分かれるので、
    |N|⁴ 通りを回さずに各側の最小値から最悪の 4 つ組を決めます。
    """
    ensure_distinct_pair(space, u, v)
    eps = as_epsilon(epsilon)
    nodes = order_subset(space, subset)
    k = 1 - eps

    at_u, (x, y) = min_pair_excess(space, nodes, u, k)
    at_v, (z, w) = min_pair_excess(space, nodes, v, k)
    quadruple = (x, y, z, w)
    lhs, rhs = sym_sides(space, u, v, quadruple)

    return TrapezoidCheck(
        inequality="sym",
        epsilon=eps,
        u=u,
        v=v,
        worst_tuple=quadruple,
        slack=at_u + at_v - 2 * k * space.d(u, v),
        lhs=lhs,
        rhs=rhs,
    )
