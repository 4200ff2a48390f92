# src/metric/__init__.py
from src.metric.build_from_edges import build_from_edges
from src.metric.build_from_l1_vectors import build_from_l1_vectors, l1_distance
from src.metric.build_from_matrix import build_from_matrix
from src.metric.models.validation_report import ValidationReport, Violation
from src.metric.open_ball import open_ball
from src.metric.permute_space import permute_space
from src.metric.scale_space import scale_space
from src.metric.validate_metric import validate_metric

__all__ = [
    "ValidationReport",
    "Violation",
    "build_from_edges",
    "build_from_l1_vectors",
    "build_from_matrix",
    "l1_distance",
    "open_ball",
    "permute_space",
    "scale_space",
    "validate_metric",
]
