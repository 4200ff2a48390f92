# src/cli/renderers/render_document.py
from pydantic import BaseModel
from rich.console import RenderableType

from src.cli.renderers.render_check import render_check
from src.cli.renderers.render_construction import render_construction
from src.cli.renderers.render_error import render_error
from src.cli.renderers.render_molecule_norm import render_molecule_norm
from src.cli.renderers.render_scan import render_scan
from src.cli.renderers.render_validation import render_validation
from src.cli.renderers.render_witness import render_witness
from src.documents.report_documents import (
    CheckDocument,
    ConstructionDocument,
    ErrorDocument,
    MoleculeNormDocument,
    ScanDocument,
    ValidationDocument,
    WitnessDocument,
)

RENDERERS = {
    ValidationDocument: render_validation,
    CheckDocument: render_check,
    ScanDocument: render_scan,
    WitnessDocument: render_witness,
    MoleculeNormDocument: render_molecule_norm,
    ConstructionDocument: render_construction,
    ErrorDocument: render_error,
}


def render_document(document: BaseModel) -> list[RenderableType] | None:
    """人間向けの表に変換する（対応する表がなければ None）"""
    renderer = RENDERERS.get(type(document))
    return None if renderer is None else renderer(document)
