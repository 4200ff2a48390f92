# src/construction/admissible_interval.py
from typing import Iterable

from src.construction.helpers.as_construction_epsilon import as_construction_epsilon
from src.construction.models.admissible_interval import AdmissibleInterval
from src.construction.models.radii_bundle import RadiiBundle
from src.core.errors import InternalInvariantError, PreconditionError
from src.core.models import LipschitzFunction, PointId, PointedMetricSpace
from src.core.rationals import Rational
from src.freespace.lip_norm import lip_norm
from src.trapezoid.check_ineq_ltp import check_ineq_ltp
from src.trapezoid.helpers.order_subset import order_subset


def admissible_interval(
        space: PointedMetricSpace,
        h: LipschitzFunction,
        subset: Iterable[PointId],
        u: PointId,
        v: PointId,
        radii: RadiiBundle,
        *,
        epsilon: Rational,
) -> AdmissibleInterval:
    """球の上で f を定数 c にするときの c の許容範囲 [lo, hi]"""
    eps = as_construction_epsilon(epsilon)
    if (u, v) != (radii.u, radii.v):
        raise PreconditionError(f"半径の向き ({radii.u}, {radii.v}) と ({u}, {v}) が一致しません")
    nodes = order_subset(space, subset)

    norm_on_n = lip_norm(space, h.restrict(nodes)).value
    if norm_on_n >= 1 - eps:
        raise PreconditionError(f"N 上の ‖h‖ = {norm_on_n} が 1-ε = {1 - eps} 未満ではありません")
    if not check_ineq_ltp(space, nodes, eps, u, v).holds:
        raise PreconditionError(f"({u}, {v}) は N 上で台形不等式を満たしません")

    a_low = max(h(x) - space.d(x, u) for x in nodes)
    a_high = min(h(x) + space.d(x, u) for x in nodes)
    b_low = max(h(x) - space.d(x, v) for x in nodes)
    b_high = min(h(x) + space.d(x, v) for x in nodes)
    lo = max(a_low + radii.r, b_low + radii.s)
    hi = min(a_high - radii.r, b_high - radii.s)
    if lo > hi:
        raise InternalInvariantError(f"c の許容区間が空です: [{lo}, {hi}]")

    return AdmissibleInterval(a_low=a_low, a_high=a_high, b_low=b_low, b_high=b_high, lo=lo, hi=hi)
