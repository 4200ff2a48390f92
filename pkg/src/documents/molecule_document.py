# src/documents/molecule_document.py
from fractions import Fraction

from pydantic import BaseModel, Field

from src.core.models import Molecule, PointedMetricSpace
from src.core.rationals import as_rational, format_rational
from src.documents.rational_value import RationalValue


class TermDocument(BaseModel):
    point: str
    coeff: RationalValue


class MoleculeDocument(BaseModel):
    """分子ファイル: {point, coeff} の並びと任意の alpha"""
    terms: list[TermDocument] = Field(min_length=1)
    alpha: RationalValue | None = Field(default=None, description="スライスの幅 (0, 1]")

    def to_molecule(self, space: PointedMetricSpace) -> Molecule:
        return Molecule(tuple(
            (space.point(term.point), as_rational(term.coeff, f"terms[{i}].coeff"))
            for i, term in enumerate(self.terms)
        ))

    def alpha_value(self, default: Fraction = Fraction(1, 2)) -> Fraction:
        return default if self.alpha is None else as_rational(self.alpha, "alpha")

    @classmethod
    def from_molecule(cls, mu: Molecule, alpha: Fraction | None = None) -> "MoleculeDocument":
        return cls(
            terms=[TermDocument(point=p.name, coeff=format_rational(c)) for p, c in mu.terms],
            alpha=None if alpha is None else format_rational(alpha),
        )


class SlicesDocument(BaseModel):
    """スライスファイル: {slices: [{terms, alpha}]}"""
    slices: list[MoleculeDocument] = Field(min_length=1)
