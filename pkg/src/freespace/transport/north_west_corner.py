# src/freespace/transport/north_west_corner.py
from fractions import Fraction
from typing import Sequence

from src.freespace.transport.models.transport_plan import Cell


def north_west_corner(supply: Sequence[Fraction], demand: Sequence[Fraction]) -> dict[Cell, Fraction]:
    """
    北西隅法で初期基底を作る
    供給と需要の総量は一致している前提です。流量 0 のセルも残すので、常に m+n-1 セルの全域木になります。
    """
    a, b = list(supply), list(demand)
    m, n = len(a), len(b)
    flows: dict[Cell, Fraction] = {}
    i = j = 0
    while True:
        x = min(a[i], b[j])
        flows[(i, j)] = x
        a[i] -= x
        b[j] -= x
        if i == m - 1 and j == n - 1:
            break
        if a[i] == 0 and i < m - 1:
            i += 1
        else:
            j += 1
    return flows
