# tests/oracles.py
"""
テスト用の総当たりオラクル
実装とは独立に、定義どおりの多重ループで値を計算します。
"""

import itertools
from fractions import Fraction

from src.core.models import Molecule, PointedMetricSpace


def brute_lip(space: PointedMetricSpace, values: dict) -> Fraction:
    best = Fraction(0)
    for p in values:
        for q in values:
            if p != q:
                best = max(best, abs(values[p] - values[q]) / space.d(p, q))
    return best


def ltp_slack(space, u, v, eps, x, y) -> Fraction:
    """1 つの (x, y) での台形不等式の slack"""
    d = space.d
    return d(x, u) + d(y, v) - (1 - eps) * (d(x, y) + d(u, v))


def sym_slack(space, u, v, eps, quadruple) -> Fraction:
    x, y, z, w = quadruple
    d = space.d
    return d(x, u) + d(y, u) + d(z, v) + d(w, v) - (1 - eps) * (2 * d(u, v) + d(x, y) + d(z, w))


def brute_ltp_slack(space, subset, eps, u, v) -> Fraction:
    d = space.d
    return min(
        d(x, u) + d(y, v) - (1 - eps) * (d(x, y) + d(u, v))
        for x in subset for y in subset
    )


def brute_sym_slack(space, subset, eps, u, v) -> Fraction:
    d = space.d
    return min(
        d(x, u) + d(y, u) + d(z, v) + d(w, v) - (1 - eps) * (2 * d(u, v) + d(x, y) + d(z, w))
        for x, y, z, w in itertools.product(subset, repeat=4)
    )


def brute_required_epsilon(space, subset, u, v) -> tuple[Fraction, Fraction]:
    """max(0, max 1 - 右辺/左辺) をすべてのタプルで直接計算する"""
    d = space.d
    eps_ltp = max(
        [Fraction(0)]
        + [1 - (d(x, u) + d(y, v)) / (d(x, y) + d(u, v)) for x in subset for y in subset]
    )
    eps_sym = max(
        [Fraction(0)]
        + [
            1 - (d(x, u) + d(y, u) + d(z, v) + d(w, v)) / (2 * d(u, v) + d(x, y) + d(z, w))
            for x, y, z, w in itertools.product(subset, repeat=4)
        ]
    )
    return eps_ltp, max(eps_ltp, eps_sym)


def _prufer_trees(n: int):
    """n 頂点のラベル付き全域木を Prüfer 列からすべて生成する"""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for node in sequence:
            degree[node] += 1
        edges = []
        for node in sequence:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, node))
            degree[leaf] -= 1
            degree[node] -= 1
        last = [i for i in range(n) if degree[i] == 1]
        edges.append((last[0], last[1]))
        yield edges


def dual_lp_norm(space: PointedMetricSpace, mu: Molecule) -> Fraction:
    """
    max Σ λ_j f(x_j)  s.t. |f(p) - f(q)| ≤ d(p, q), f(0) = 0 を頂点の列挙で解く
    頂点は基点を根とする全域木の各辺を ±d で等号にした点なので、木と符号をすべて試します（n ≤ 5 向け）。
    """
    n = len(space.points)
    points = space.points
    base = space.base.index
    best = None
    for edges in _prufer_trees(n):
        for signs in itertools.product((1, -1), repeat=len(edges)):
            adjacency = {i: [] for i in range(n)}
            for (a, b), sign in zip(edges, signs):
                # f(b) - f(a) = sign·d(a, b)
                adjacency[a].append((b, sign))
                adjacency[b].append((a, -sign))
            f = {base: Fraction(0)}
            stack = [base]
            while stack:
                a = stack.pop()
                for b, sign in adjacency[a]:
                    if b not in f:
                        f[b] = f[a] + sign * space.d(points[a], points[b])
                        stack.append(b)
            feasible = all(
                abs(f[i] - f[j]) <= space.d(points[i], points[j])
                for i in range(n) for j in range(i + 1, n)
            )
            if not feasible:
                continue
            value = sum((c * f[p.index] for p, c in mu.terms), Fraction(0))
            if best is None or value > best:
                best = value
    return best
