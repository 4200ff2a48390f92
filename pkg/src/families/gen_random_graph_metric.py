# src/families/gen_random_graph_metric.py
import random
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.models import PointedMetricSpace
from src.metric.build_from_matrix import build_from_matrix


def floyd_warshall(weights: list[list[Fraction | None]]) -> list[list[Fraction]]:
    """None を辺なしとして全点対最短路を求める（グラフは連結である前提）"""
    n = len(weights)
    dist = [row[:] for row in weights]
    for k in range(n):
        for i in range(n):
            if dist[i][k] is None:
                continue
            for j in range(n):
                if dist[k][j] is None:
                    continue
                through = dist[i][k] + dist[k][j]
                if dist[i][j] is None or through < dist[i][j]:
                    dist[i][j] = through
    return dist


def gen_random_graph_metric(n: int, seed: int) -> PointedMetricSpace:
    """
    ランダムな連結重み付きグラフの最短路距離
    全域木を張ってから残りの辺を確率 1/3 で足し、重みは p/q (1 ≤ p ≤ 12, 1 ≤ q ≤ 4) です。
    """
    if n < 2:
        raise PreconditionError(f"n は 2 以上で指定してください: {n}")

    rng = random.Random(seed)
    weights: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        weights[i][i] = Fraction(0)

    def add_edge(i: int, j: int) -> None:
        weights[i][j] = weights[j][i] = Fraction(rng.randint(1, 12), rng.randint(1, 4))

    for j in range(1, n):
        add_edge(rng.randrange(j), j)
    for i in range(n):
        for j in range(i + 1, n):
            if weights[i][j] is None and rng.random() < 1 / 3:
                add_edge(i, j)

    names = [f"p{i}" for i in range(n)]
    return build_from_matrix(names, names[0], floyd_warshall(weights))
