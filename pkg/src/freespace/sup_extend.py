# src/freespace/sup_extend.py
from src.core.errors import PreconditionError
from src.core.models import LipschitzFunction, PartialFunction, PointedMetricSpace
from src.freespace.lip_norm import lip_norm


def sup_extend(space: PointedMetricSpace, f: PartialFunction, weight: PartialFunction) -> LipschitzFunction:
    """
    L 上の f を M 全体へ延長する
    L の外では F(y) = max_{x∈L} (f(x) + |weight(x)| - d(x, y))、L 上では F = f です。

    Raises:
        PreconditionError: 定義域が食い違う、基点が L にない、f(0) ≠ 0、
            または f + |weight| が L 上で 1-Lipschitz でない場合
    """
    domain = f.domain
    if weight.domain != domain:
        raise PreconditionError("f と weight の定義域が一致しません")
    if space.base not in domain:
        raise PreconditionError(f"基点 {space.base} が延長元の集合 L に含まれていません")
    if f(space.base) != 0:
        raise PreconditionError(f"基点での値が 0 ではありません: {f(space.base)}")

    lifted = f + abs(weight)
    constant = lip_norm(space, lifted)
    if constant.value > 1:
        p, q = constant.pair
        raise PreconditionError(f"f + |weight| が L 上で 1-Lipschitz ではありません (ペア ({p}, {q}) で {constant.value})")

    anchors = sorted(domain)
    values = {
        y: f(y) if y in domain else max(lifted(x) - space.d(x, y) for x in anchors)
        for y in space.points
    }
    return LipschitzFunction.on(space, values)
