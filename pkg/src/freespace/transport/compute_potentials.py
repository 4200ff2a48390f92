# src/freespace/transport/compute_potentials.py
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from src.core.errors import InternalInvariantError
from src.freespace.transport.models.transport_plan import Cell


def compute_potentials(
        basis: Iterable[Cell],
        cost: Sequence[Sequence[Fraction]],
        m: int,
        n: int,
) -> tuple[list[Fraction], list[Fraction]]:
    """基底セル上で u_i + v_j = c_ij となるポテンシャルを u_0 = 0 から幅優先で決める"""
    rows: list[list[int]] = [[] for _ in range(m)]
    cols: list[list[int]] = [[] for _ in range(n)]
    for i, j in basis:
        rows[i].append(j)
        cols[j].append(i)

    u: list[Fraction | None] = [None] * m
    v: list[Fraction | None] = [None] * n
    u[0] = Fraction(0)
    queue: deque[tuple[str, int]] = deque([("r", 0)])
    while queue:
        kind, k = queue.popleft()
        if kind == "r":
            for j in rows[k]:
                if v[j] is None:
                    v[j] = cost[k][j] - u[k]
                    queue.append(("c", j))
        else:
            for i in cols[k]:
                if u[i] is None:
                    u[i] = cost[i][k] - v[k]
                    queue.append(("r", i))

    if any(x is None for x in u) or any(x is None for x in v):
        raise InternalInvariantError("基底が全域木になっていません（ポテンシャルが決まらない行・列があります）")
    return u, v
