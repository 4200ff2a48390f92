# src/families/models/tail_split_witness.py
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TailSplitWitness:
    """
    頭部・尾部への座標分割で証明された証人ペア
    N の各点は尾部に δ 以下の質量しか持たず、u と v は頭部で δ 以下しか違いません。
    """
    u: str
    v: str
    head: tuple[int, ...]
    delta: Fraction
