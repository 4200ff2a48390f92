# src/construction/compute_radii.py
from typing import Iterable

from loguru import logger

from src.construction.helpers.as_construction_epsilon import as_construction_epsilon
from src.construction.models.radii_bundle import RadiiBundle
from src.core.errors import InternalInvariantError, PreconditionError
from src.core.models import PointId, PointedMetricSpace
from src.core.rationals import Rational
from src.trapezoid.check_sltp import check_sltp
from src.trapezoid.helpers.ensure_distinct_pair import ensure_distinct_pair
from src.trapezoid.helpers.min_pair_excess import min_pair_excess
from src.trapezoid.helpers.order_subset import order_subset


def compute_radii(
        space: PointedMetricSpace,
        subset: Iterable[PointId],
        epsilon: Rational,
        u: PointId,
        v: PointId,
) -> RadiiBundle:
    """
    r0 = ½·min_{(x,y)∈N²} (d(x,u) + d(y,u) - (1-ε)d(x,y))、s0 は v について同様
    r = min(r0, (1-ε)²d(u,v))、s = (1-ε)²d(u,v) - r。r = 0 なら u と v を入れ替えます。
    """
    eps = as_construction_epsilon(epsilon)
    ensure_distinct_pair(space, u, v)
    nodes = order_subset(space, subset)
    if space.base not in nodes:
        raise PreconditionError(f"基点 {space.base} が N に含まれていません")

    check = check_sltp(space, nodes, eps, u, v)
    if not check.holds:
        raise PreconditionError(
            f"({u}, {v}) は ε={eps} の証人ペアではありません "
            f"(タプル {tuple(str(p) for p in check.worst_tuple)} で slack {check.slack})"
        )

    k = 1 - eps
    r0 = min_pair_excess(space, nodes, u, k)[0] / 2
    s0 = min_pair_excess(space, nodes, v, k)[0] / 2
    if r0 + s0 < k * space.d(u, v):
        raise InternalInvariantError(f"r0 + s0 = {r0 + s0} が (1-ε)d(u,v) = {k * space.d(u, v)} を下回りました")

    target = k * k * space.d(u, v)
    r = min(r0, target)
    if r == 0:
        u, v, r0, s0 = v, u, s0, r0
        r = min(r0, target)
        logger.debug(f"[construct] r = 0 のため向きを入れ替えました: u={u}, v={v}")
    s = target - r

    if not (0 < r <= r0 and 0 <= s <= s0):
        raise InternalInvariantError(f"半径が範囲外です: r={r}, r0={r0}, s={s}, s0={s0}")
    return RadiiBundle(r0=r0, s0=s0, r=r, s=s, u=u, v=v)
