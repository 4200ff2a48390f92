# src/trapezoid/helpers/tuple_slack.py
from fractions import Fraction

from src.core.models import PointId, PointedMetricSpace


def ltp_sides(space: PointedMetricSpace, u: PointId, v: PointId, x: PointId, y: PointId) -> tuple[Fraction, Fraction]:
    """台形不等式の (左辺, 右辺) = (d(x,y) + d(u,v), d(x,u) + d(y,v))"""
    return space.d(x, y) + space.d(u, v), space.d(x, u) + space.d(y, v)


def sym_sides(
        space: PointedMetricSpace,
        u: PointId,
        v: PointId,
        quadruple: tuple[PointId, PointId, PointId, PointId],
) -> tuple[Fraction, Fraction]:
    """対称版の (左辺, 右辺) = (2d(u,v) + d(x,y) + d(z,w), d(x,u) + d(y,u) + d(z,v) + d(w,v))"""
    x, y, z, w = quadruple
    d = space.d
    return 2 * d(u, v) + d(x, y) + d(z, w), d(x, u) + d(y, u) + d(z, v) + d(w, v)
