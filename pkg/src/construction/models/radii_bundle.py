# src/construction/models/radii_bundle.py
from dataclasses import dataclass
from fractions import Fraction

from src.core.models import PointId


@dataclass(frozen=True)
class RadiiBundle:
    """
    2 つの球の半径
    u, v は r > 0 になるように向きを揃えた後のペアです。r + s = (1-ε)²·d(u, v)。
    """
    r0: Fraction
    s0: Fraction
    r: Fraction
    s: Fraction
    u: PointId
    v: PointId
