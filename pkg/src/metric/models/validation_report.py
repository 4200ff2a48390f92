# src/metric/models/validation_report.py
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from src.core.models import PointId

AxiomTag = Literal["nonnegativity", "zero_diagonal", "separation", "symmetry", "triangle"]


@dataclass(frozen=True)
class Violation:
    """
    公理違反 1 件
    triangle の場合 points は (x, z, y) で、lhs = d(x,z), rhs = d(x,y) + d(y,z) です。
    """
    axiom: AxiomTag
    points: tuple[PointId, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_axiom(self, axiom: AxiomTag) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]
