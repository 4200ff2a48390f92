# src/construction/build_bump.py
from fractions import Fraction

from loguru import logger

from src.construction.models.radii_bundle import RadiiBundle
from src.core.errors import InternalInvariantError, PreconditionError
from src.core.models import LipschitzFunction, PointId, PointedMetricSpace
from src.freespace.lip_norm import lip_norm
from src.metric.open_ball import open_ball


def build_bump(space: PointedMetricSpace, u: PointId, v: PointId, radii: RadiiBundle) -> LipschitzFunction:
    """
    g = r - d(·,u) on B(u,r)、-s + d(·,v) on B(v,s)、それ以外は 0
    s = 0 なら B(v,s) は空です。
    """
    if (u, v) != (radii.u, radii.v):
        raise PreconditionError(f"半径の向き ({radii.u}, {radii.v}) と ({u}, {v}) が一致しません")

    ball_u = open_ball(space, u, radii.r)
    ball_v = open_ball(space, v, radii.s)
    if ball_u & ball_v:
        raise InternalInvariantError(f"B({u}, {radii.r}) と B({v}, {radii.s}) が交わっています")
    if space.base in ball_u | ball_v:
        logger.error(f"[construct] 基点 {space.base} が球に含まれています (N に基点がない可能性があります)")
        raise InternalInvariantError(f"基点 {space.base} が B(u,r) ∪ B(v,s) に含まれています")

    values = {}
    for x in space.points:
        if x in ball_u:
            values[x] = radii.r - space.d(x, u)
        elif x in ball_v:
            values[x] = space.d(x, v) - radii.s
        else:
            values[x] = Fraction(0)
    g = LipschitzFunction.on(space, values)

    if lip_norm(space, g).value > 1:
        raise InternalInvariantError("g が 1-Lipschitz になっていません")
    if g(u) - g(v) != radii.r + radii.s:
        raise InternalInvariantError(f"g(u) - g(v) = {g(u) - g(v)} が r + s = {radii.r + radii.s} と一致しません")
    return g
