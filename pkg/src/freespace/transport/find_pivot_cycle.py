# src/freespace/transport/find_pivot_cycle.py
from collections import deque
from typing import Iterable

from src.core.errors import InternalInvariantError
from src.freespace.transport.models.transport_plan import Cell


def find_pivot_cycle(basis: Iterable[Cell], entering: Cell) -> list[tuple[Cell, int]]:
    """
    流入セルが基底木に作る閉路を、符号 (+1 / -1) 付きで返す
    先頭は流入セル (+1)。残りは木の中の行 i_e から列 j_e への経路で、符号が交互に並びます。
    """
    neighbours: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for i, j in basis:
        neighbours.setdefault(("r", i), []).append(("c", j))
        neighbours.setdefault(("c", j), []).append(("r", i))

    i_e, j_e = entering
    start, goal = ("r", i_e), ("c", j_e)
    parent: dict[tuple[str, int], tuple[str, int] | None] = {start: None}
    queue = deque([start])
    while queue and goal not in parent:
        node = queue.popleft()
        for nxt in sorted(neighbours.get(node, [])):
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)

    if goal not in parent:
        raise InternalInvariantError(f"流入セル {entering} に対する閉路が見つかりません")

    nodes = [goal]
    while parent[nodes[-1]] is not None:
        nodes.append(parent[nodes[-1]])
    nodes.reverse()

    cycle: list[tuple[Cell, int]] = [(entering, +1)]
    for k in range(len(nodes) - 1):
        a, b = nodes[k], nodes[k + 1]
        cell = (a[1], b[1]) if a[0] == "r" else (b[1], a[1])
        cycle.append((cell, -1 if k % 2 == 0 else +1))
    return cycle
