# src/freespace/molecule_norm.py
from fractions import Fraction

from loguru import logger

from src.core.errors import InternalInvariantError
from src.core.models import LipschitzFunction, Molecule, PointId, PointedMetricSpace
from src.freespace.evaluate_pairing import evaluate_pairing
from src.freespace.models.results import MoleculeNorm
from src.freespace.transport import solve_transport


def balance_at_base(space: PointedMetricSpace, mu: Molecule) -> dict[PointId, Fraction]:
    """μ - (Σλ)·δ_base の係数（0 の項は除く）"""
    coefficients = {space.require(p): c for p, c in mu.terms}
    coefficients[space.base] = coefficients.get(space.base, Fraction(0)) - mu.total_mass
    return {p: c for p, c in coefficients.items() if c != 0}


def molecule_norm(space: PointedMetricSpace, mu: Molecule, max_pivots: int | None = None) -> MoleculeNorm:
    """
    自由空間ノルム ‖μ‖_F(M) を最小費用輸送問題として厳密に計算する
    双対最適解は列ポテンシャルの c 変換 f(z) = min_j (d(z, y_j) - v_j) を基点で 0 になるようにずらしたものです。
    """
    balanced = balance_at_base(space, mu)
    sources = sorted(p for p, c in balanced.items() if c > 0)
    sinks = sorted(p for p, c in balanced.items() if c < 0)
    if not sources:
        return MoleculeNorm(Fraction(0), LipschitzFunction.zero(space))

    plan = solve_transport(
        supply=[balanced[p] for p in sources],
        demand=[-balanced[q] for q in sinks],
        cost=[[space.d(p, q) for q in sinks] for p in sources],
        max_pivots=max_pivots,
    )

    v = plan.column_potentials
    raw = {z: min(space.d(z, y) - v[j] for j, y in enumerate(sinks)) for z in space.points}
    shift = raw[space.base]
    optimizer = LipschitzFunction.on(space, {z: value - shift for z, value in raw.items()})

    pairing = evaluate_pairing(optimizer, mu)
    if pairing != plan.cost:
        logger.error(f"[transport] 双対解のペアリング {pairing} が輸送コスト {plan.cost} と一致しません")
        raise InternalInvariantError("双対最適解が輸送コストを達成していません")
    return MoleculeNorm(plan.cost, optimizer)
