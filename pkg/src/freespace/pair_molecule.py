# src/freespace/pair_molecule.py
from src.core.errors import PreconditionError
from src.core.models import Molecule, PointId, PointedMetricSpace


def pair_molecule(space: PointedMetricSpace, x: PointId, y: PointId) -> Molecule:
    """基本分子 (δ_x - δ_y) / d(x, y)"""
    space.require(x)
    space.require(y)
    if x == y:
        raise PreconditionError(f"基本分子には相異なる 2 点が必要です: {x}")
    weight = 1 / space.d(x, y)
    return Molecule(((x, weight), (y, -weight)))
