# src/families/find_tail_split_witness.py
from fractions import Fraction
from typing import Iterable, Sequence

from loguru import logger

from src.core.errors import PreconditionError
from src.core.rationals import Rational, as_rational
from src.families.models.tail_split_witness import TailSplitWitness
from src.metric.build_from_l1_vectors import l1_distance


def find_tail_split_witness(
        vectors: Sequence[tuple[str, Sequence[Rational]]],
        subset: Iterable[str],
        epsilon: Rational,
) -> TailSplitWitness | None:
    """
    δ/n 尾部分割による証人探し
    N の外の各ペア (u, v) について、N が載せる質量の大きい順に座標を並べ、頭部/尾部の切れ目をすべて試します。
    δ = ε·d(u, v)/6 として、N の全点の尾部質量が δ 以下かつ u, v の頭部の差が δ 以下なら採用です。
    """
    eps = as_rational(epsilon, "epsilon")
    width = max(len(coords) for _, coords in vectors)
    table = {
        label: [as_rational(c) for c in coords] + [Fraction(0)] * (width - len(coords))
        for label, coords in vectors
    }
    labels = [label for label, _ in vectors]
    members = set(subset)
    unknown = members - set(table)
    if unknown:
        raise PreconditionError(f"存在しない点です: {', '.join(sorted(unknown))}")

    mass = [max((abs(table[x][c]) for x in members), default=Fraction(0)) for c in range(width)]
    order = sorted(range(width), key=lambda c: (-mass[c], c))
    outside = [label for label in labels if label not in members]

    for i, u in enumerate(outside):
        for v in outside[i + 1:]:
            delta = eps * l1_distance(table[u], table[v]) / 6
            for cut in range(width + 1):
                head, tail = order[:cut], order[cut:]
                if sum(abs(table[u][c] - table[v][c]) for c in head) > delta:
                    break
                if all(sum(abs(table[x][c]) for c in tail) <= delta for x in members):
                    logger.debug(f"[witness] 尾部分割で ({u}, {v}) を証明しました (頭部 {len(head)} 座標, δ={delta})")
                    return TailSplitWitness(u=u, v=v, head=tuple(sorted(head)), delta=delta)
    return None
