# src/core/models.py

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from src.core.errors import PreconditionError


@dataclass(frozen=True)
class PointId:
    """
    空間内の点
    name は空間内で一意、index は points 内の位置です。
    """
    name: str
    index: int

    def __lt__(self, other: "PointId") -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class PointedMetricSpace:
    """
    基点付き有限距離空間
    距離は厳密な有理数の行列で保持します。公理のチェックは validate_metric で別途行います。
    """
    points: tuple[PointId, ...]
    dist: tuple[tuple[Fraction, ...], ...]
    base: PointId

    @cached_property
    def _by_name(self) -> dict[str, PointId]:
        return {p.name: p for p in self.points}

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return (
            isinstance(p, PointId)
            and 0 <= p.index < len(self.points)
            and self.points[p.index] == p
        )

    @property
    def names(self) -> list[str]:
        return [p.name for p in self.points]

    def d(self, p: PointId, q: PointId) -> Fraction:
        return self.dist[p.index][q.index]

    def point(self, name: str) -> PointId:
        try:
            return self._by_name[name]
        except KeyError:
            raise PreconditionError(f"空間に存在しない点です: {name}") from None

    def points_named(self, names: Iterable[str]) -> list[PointId]:
        return [self.point(name) for name in names]

    def require(self, p: PointId) -> PointId:
        if p not in self:
            raise PreconditionError(f"この空間の点ではありません: {p}")
        return p

    def pairs(self) -> Iterator[tuple[PointId, PointId]]:
        """非順序ペア (p, q), index(p) < index(q) を辞書式順に列挙"""
        for i, p in enumerate(self.points):
            for q in self.points[i + 1:]:
                yield p, q

    @cached_property
    def diameter(self) -> Fraction:
        return max((self.d(p, q) for p, q in self.pairs()), default=Fraction(0))


@dataclass(frozen=True)
class PartialFunction:
    """部分集合 L 上でだけ値を持つ関数（拡張前の f_i|_L など）"""
    values: Mapping[PointId, Fraction]

    @property
    def domain(self) -> frozenset[PointId]:
        return frozenset(self.values)

    def __call__(self, p: PointId) -> Fraction:
        try:
            return self.values[p]
        except KeyError:
            raise PreconditionError(f"関数の定義域外の点です: {p}") from None

    def __add__(self, other: "PartialFunction") -> "PartialFunction":
        return PartialFunction({p: v + other(p) for p, v in self.values.items()})

    def __sub__(self, other: "PartialFunction") -> "PartialFunction":
        return PartialFunction({p: v - other(p) for p, v in self.values.items()})

    def __abs__(self) -> "PartialFunction":
        return PartialFunction({p: abs(v) for p, v in self.values.items()})


@dataclass(frozen=True)
class LipschitzFunction:
    """
    Lip_0(M) の元
    全点で値を持ち、基点で 0 になります（生成は on() を通すと検証されます）。
    """
    values: Mapping[PointId, Fraction]

    @classmethod
    def on(cls, space: PointedMetricSpace, values: Mapping[PointId, Fraction]) -> "LipschitzFunction":
        missing = [p.name for p in space.points if p not in values]
        if missing:
            raise PreconditionError(f"値が定義されていない点があります: {', '.join(missing)}")
        if values[space.base] != 0:
            raise PreconditionError(f"基点 {space.base} での値が 0 ではありません: {values[space.base]}")
        return cls({p: Fraction(values[p]) for p in space.points})

    @classmethod
    def zero(cls, space: PointedMetricSpace) -> "LipschitzFunction":
        return cls({p: Fraction(0) for p in space.points})

    def __call__(self, p: PointId) -> Fraction:
        try:
            return self.values[p]
        except KeyError:
            raise PreconditionError(f"関数の定義域外の点です: {p}") from None

    def __add__(self, other: "LipschitzFunction") -> "LipschitzFunction":
        return LipschitzFunction({p: v + other(p) for p, v in self.values.items()})

    def __sub__(self, other: "LipschitzFunction") -> "LipschitzFunction":
        return LipschitzFunction({p: v - other(p) for p, v in self.values.items()})

    def __neg__(self) -> "LipschitzFunction":
        return LipschitzFunction({p: -v for p, v in self.values.items()})

    def __abs__(self) -> "LipschitzFunction":
        return LipschitzFunction({p: abs(v) for p, v in self.values.items()})

    def scaled(self, t: Fraction) -> "LipschitzFunction":
        return LipschitzFunction({p: t * v for p, v in self.values.items()})

    def restrict(self, points: Iterable[PointId]) -> PartialFunction:
        return PartialFunction({p: self(p) for p in points})


@dataclass(frozen=True)
class Molecule:
    """
    有限台の分子 Σ λ_j δ_{x_j}
    点は互いに異なり、係数は 0 以外です。
    """
    terms: tuple[tuple[PointId, Fraction], ...]

    def __post_init__(self):
        seen: set[PointId] = set()
        for p, coeff in self.terms:
            if p in seen:
                raise PreconditionError(f"分子の点が重複しています: {p}")
            if coeff == 0:
                raise PreconditionError(f"分子の係数が 0 です: {p}")
            seen.add(p)

    @classmethod
    def of(cls, coefficients: Mapping[PointId, Fraction]) -> "Molecule":
        return cls(tuple(sorted(((p, Fraction(c)) for p, c in coefficients.items()), key=lambda t: t[0].index)))

    @property
    def support(self) -> list[PointId]:
        return [p for p, _ in self.terms]

    @property
    def total_mass(self) -> Fraction:
        return sum((c for _, c in self.terms), Fraction(0))

    def scaled(self, t: Fraction) -> "Molecule":
        if t == 0:
            raise PreconditionError("分子を 0 倍することはできません")
        return Molecule(tuple((p, t * c) for p, c in self.terms))


@dataclass(frozen=True)
class WeakStarSlice:
    """
    w* スライス S(B_{Lip_0(M)}, μ/‖μ‖, α)
    ‖μ‖ はキャッシュとして保持し、所属判定は正規化した汎関数で行います。
    """
    functional: Molecule
    norm_of_functional: Fraction
    alpha: Fraction = field(default=Fraction(1, 2))

    def __post_init__(self):
        if self.norm_of_functional <= 0:
            raise PreconditionError("ノルム 0 の分子からスライスは作れません")
        if not (0 < self.alpha <= 1):
            raise PreconditionError(f"alpha は (0, 1] の範囲で指定してください: {self.alpha}")
