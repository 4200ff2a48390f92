# src/families/gen_random_l1_cloud.py
import random
from fractions import Fraction

from src.core.errors import PreconditionError

# 頭部の次元数
HEAD_DIMENSIONS: int = 3


def gen_random_l1_cloud(n: int, seed: int, epsilon: Fraction = Fraction(1, 10)) -> list[tuple[str, list[Fraction]]]:
    """
    有界かつ一様離散なランダム ℓ₁ 点群
    点 i はクラス i % (n // 2) の頭部ベクトルを共有し（1 座標だけ ε/12 以下ずらす）、
    自分専用の尾部座標 3 + i に高さ 1 を持ちます。相異なる 2 点の距離は 2 以上 14 以下です。
    """
    if n < 2:
        raise PreconditionError(f"n は 2 以上で指定してください: {n}")

    rng = random.Random(seed)
    classes = n // 2
    heads = [[Fraction(rng.randint(0, 4), 2) for _ in range(HEAD_DIMENSIONS)] for _ in range(classes)]

    vectors = []
    for i in range(n):
        head = list(heads[i % classes])
        head[rng.randrange(HEAD_DIMENSIONS)] += Fraction(rng.randint(0, 10), 10) * epsilon / 12
        tail = [Fraction(0)] * n
        tail[i] = Fraction(1)
        vectors.append((f"p{i}", head + tail))
    return vectors
