# src/freespace/make_slice.py
from fractions import Fraction

from src.core.models import Molecule, PointedMetricSpace, WeakStarSlice
from src.freespace.molecule_norm import molecule_norm


def make_slice(space: PointedMetricSpace, mu: Molecule, alpha: Fraction) -> WeakStarSlice:
    """‖μ‖ を計算してキャッシュしたスライスを作る（‖μ‖ = 0 や α ∉ (0, 1] は拒否）"""
    return WeakStarSlice(functional=mu, norm_of_functional=molecule_norm(space, mu).norm, alpha=Fraction(alpha))
