# src/documents/rational_value.py
from fractions import Fraction
from typing import Mapping

from pydantic import StrictInt, StrictStr

from src.core.models import PointId
from src.core.rationals import format_rational

# 入力ドキュメント中の有理数（"3/2"、"0.25"、整数）。float は型の段階で弾く
RationalValue = StrictInt | StrictStr


def function_values(values: Mapping[PointId, Fraction]) -> dict[str, str]:
    """関数を {点の名前: "p/q"} に直す（index 順）"""
    return {p.name: format_rational(values[p]) for p in sorted(values)}
