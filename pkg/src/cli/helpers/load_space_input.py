# src/cli/helpers/load_space_input.py
from src.core.models import PointedMetricSpace
from src.documents.load_document import load_document
from src.documents.space_document import SpaceDocument


def load_space_input(path: str) -> tuple[PointedMetricSpace, SpaceDocument]:
    document = load_document(path, SpaceDocument)
    return document.to_space(), document
