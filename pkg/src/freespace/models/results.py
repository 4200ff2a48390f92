# src/freespace/models/results.py
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from src.core.models import LipschitzFunction, PointId


class SliceMembership(str, Enum):
    INSIDE = "inside"
    OUTSIDE_SLICE = "outside_slice"
    OUTSIDE_BALL = "outside_ball"


class LipschitzConstant(NamedTuple):
    """Lipschitz 定数と、それを達成する (index の小さい順の) ペア"""
    value: Fraction
    pair: tuple[PointId, PointId] | None


class MoleculeNorm(NamedTuple):
    """‖μ‖ と、それを達成する双対最適解 f*（‖f*‖ ≤ 1, ⟨f*, μ⟩ = ‖μ‖）"""
    norm: Fraction
    optimizer: LipschitzFunction
