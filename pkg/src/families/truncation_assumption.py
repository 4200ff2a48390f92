# src/families/truncation_assumption.py
import re
from typing import Iterable

from src.families.models.family_spec import FamilySpec

FRESH_POINT = re.compile(r"^[uv](\d+)$")


def truncation_assumption(spec: FamilySpec, subset: Iterable[str]) -> str | None:
    """
    無限族を k で打ち切ってスキャンしてよいかの前提を 1 行で返す（ex1 / ex2 以外は None）
    添字の入れ替えは N を固定する等長写像なので、N に現れない添字が 1 つでもあれば十分です。
    """
    if spec.family not in ("ex1", "ex2"):
        return None

    indices = [int(m.group(1)) for name in subset if (m := FRESH_POINT.match(name))]
    highest = max(indices, default=0)
    adequate = spec.size >= highest + 1
    return (
        f"truncation_adequacy: {spec.family} k={spec.size}, "
        f"N の最大添字 {highest}, {'十分 (未使用の添字あり)' if adequate else '不十分 (未使用の添字なし)'}"
    )
