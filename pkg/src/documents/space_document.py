# src/documents/space_document.py
from pydantic import BaseModel, Field, model_validator

from src.core.models import PointedMetricSpace
from src.core.rationals import format_rational
from src.documents.rational_value import RationalValue
from src.families.models.family_spec import FamilySpec
from src.metric.build_from_edges import build_from_edges
from src.metric.build_from_l1_vectors import build_from_l1_vectors
from src.metric.build_from_matrix import build_from_matrix


class EdgeDocument(BaseModel):
    a: str
    b: str
    d: RationalValue


class SpaceDocument(BaseModel):
    """空間ファイル: matrix / edges / l1 のどれか 1 つで距離を与える"""
    points: list[str] = Field(description="点の名前（この順に index が振られる）")
    base: str = Field(description="基点の名前")
    matrix: list[list[RationalValue]] | None = Field(default=None, description="行優先の距離行列")
    edges: list[EdgeDocument] | None = Field(default=None, description="全ペアの距離 {a, b, d}")
    l1: dict[str, list[RationalValue]] | None = Field(default=None, description="ℓ₁ の座標 (名前 → 座標列)")
    family: FamilySpec | None = Field(default=None, description="生成元の族（example で作った場合）")

    @model_validator(mode="after")
    def _exactly_one_distance_source(self):
        given = [name for name in ("matrix", "edges", "l1") if getattr(self, name) is not None]
        if len(given) != 1:
            raise ValueError(f"matrix / edges / l1 のうちちょうど 1 つを指定してください（指定: {given or 'なし'}）")
        if self.l1 is not None and sorted(self.l1) != sorted(self.points):
            raise ValueError("l1 のキーが points と一致しません")
        return self

    def to_space(self) -> PointedMetricSpace:
        if self.matrix is not None:
            return build_from_matrix(self.points, self.base, self.matrix)
        if self.edges is not None:
            return build_from_edges(self.points, self.base, [(e.a, e.b, e.d) for e in self.edges])
        return build_from_l1_vectors([(name, self.l1[name]) for name in self.points], self.base)

    @classmethod
    def from_space(cls, space: PointedMetricSpace, family: FamilySpec | None = None) -> "SpaceDocument":
        return cls(
            points=space.names,
            base=space.base.name,
            matrix=[[format_rational(value) for value in row] for row in space.dist],
            family=family,
        )
