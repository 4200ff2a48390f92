# src/freespace/transport/solve_transport.py
from fractions import Fraction
from typing import Sequence

from loguru import logger

from src.core.errors import InternalInvariantError, PreconditionError
from src.core.settings import get_settings
from src.freespace.transport.compute_potentials import compute_potentials
from src.freespace.transport.find_pivot_cycle import find_pivot_cycle
from src.freespace.transport.models.transport_plan import Cell, TransportPlan
from src.freespace.transport.north_west_corner import north_west_corner


def _entering_cell(
        basis: set[Cell],
        cost: Sequence[Sequence[Fraction]],
        u: Sequence[Fraction],
        v: Sequence[Fraction],
) -> Cell | None:
    # Bland の規則: 被約費用が負のセルのうち辞書式で最初のもの
    for i, row in enumerate(cost):
        for j, c in enumerate(row):
            if (i, j) not in basis and c - u[i] - v[j] < 0:
                return i, j
    return None


def solve_transport(
        supply: Sequence[Fraction],
        demand: Sequence[Fraction],
        cost: Sequence[Sequence[Fraction]],
        max_pivots: int | None = None,
) -> TransportPlan:
    """
    有理数上で厳密に解く輸送シンプレックス法
    北西隅法の初期基底から、流入・流出ともに Bland の規則でピボットします。
    """
    m, n = len(supply), len(demand)
    if m == 0 or n == 0:
        raise PreconditionError("供給側・需要側はそれぞれ 1 つ以上必要です")
    if any(a <= 0 for a in supply) or any(b <= 0 for b in demand):
        raise PreconditionError("供給量・需要量は正である必要があります")
    if sum(supply) != sum(demand):
        raise PreconditionError(f"供給の総量 {sum(supply)} と需要の総量 {sum(demand)} が一致しません")

    limit = max_pivots if max_pivots is not None else get_settings().transport_max_pivots
    flows = north_west_corner(supply, demand)
    pivots = 0

    while True:
        u, v = compute_potentials(flows, cost, m, n)
        entering = _entering_cell(set(flows), cost, u, v)
        if entering is None:
            break

        pivots += 1
        if pivots > limit:
            raise InternalInvariantError(f"輸送問題のピボット回数が上限 {limit} を超えました")

        cycle = find_pivot_cycle(flows, entering)
        minus = [cell for cell, sign in cycle if sign < 0]
        theta = min(flows[cell] for cell in minus)
        leaving = min(cell for cell in minus if flows[cell] == theta)

        flows[entering] = Fraction(0)
        for cell, sign in cycle:
            flows[cell] += sign * theta
        del flows[leaving]
        logger.debug(f"[transport] pivot {pivots}: in={entering} out={leaving} theta={theta}")

    total = sum((cost[i][j] * x for (i, j), x in flows.items()), Fraction(0))
    logger.debug(f"[transport] {m}x{n} を {pivots} 回のピボットで解きました (cost={total})")
    return TransportPlan(
        flows=dict(flows),
        cost=total,
        row_potentials=tuple(u),
        column_potentials=tuple(v),
        pivots=pivots,
    )
