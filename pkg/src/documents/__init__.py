# src/documents/__init__.py
from src.documents.load_document import load_document, read_input
from src.documents.molecule_document import MoleculeDocument, SlicesDocument, TermDocument
from src.documents.report_documents import (
    CheckDocument,
    ConstructionDocument,
    ErrorDocument,
    MoleculeNormDocument,
    ScanDocument,
    ValidationDocument,
    WitnessDocument,
)
from src.documents.space_document import EdgeDocument, SpaceDocument

__all__ = [
    "CheckDocument",
    "ConstructionDocument",
    "EdgeDocument",
    "ErrorDocument",
    "MoleculeDocument",
    "MoleculeNormDocument",
    "ScanDocument",
    "SlicesDocument",
    "SpaceDocument",
    "TermDocument",
    "ValidationDocument",
    "WitnessDocument",
    "load_document",
    "read_input",
]
