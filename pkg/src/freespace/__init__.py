# src/freespace/__init__.py
from src.freespace.evaluate_pairing import evaluate_pairing
from src.freespace.lip_norm import lip_norm
from src.freespace.make_slice import make_slice
from src.freespace.models.results import LipschitzConstant, MoleculeNorm, SliceMembership
from src.freespace.molecule_norm import balance_at_base, molecule_norm
from src.freespace.pair_molecule import pair_molecule
from src.freespace.slice_contains import slice_contains
from src.freespace.sup_extend import sup_extend

__all__ = [
    "LipschitzConstant",
    "MoleculeNorm",
    "SliceMembership",
    "balance_at_base",
    "evaluate_pairing",
    "lip_norm",
    "make_slice",
    "molecule_norm",
    "pair_molecule",
    "slice_contains",
    "sup_extend",
]
