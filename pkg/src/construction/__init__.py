# src/construction/__init__.py
from src.construction.admissible_interval import admissible_interval
from src.construction.build_bump import build_bump
from src.construction.build_symmetric_witnesses import build_symmetric_witnesses
from src.construction.compute_radii import compute_radii
from src.construction.extract_witness_pair import extract_witness_pair
from src.construction.models.admissible_interval import AdmissibleInterval
from src.construction.models.construction_report import ConstructionReport, ConstructionStatus, SliceConstruction
from src.construction.models.radii_bundle import RadiiBundle
from src.construction.pick_interior_function import pick_interior_function

__all__ = [
    "AdmissibleInterval",
    "ConstructionReport",
    "ConstructionStatus",
    "RadiiBundle",
    "SliceConstruction",
    "admissible_interval",
    "build_bump",
    "build_symmetric_witnesses",
    "compute_radii",
    "extract_witness_pair",
    "pick_interior_function",
]
