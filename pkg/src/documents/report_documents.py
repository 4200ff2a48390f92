# src/documents/report_documents.py
from typing import Literal

from pydantic import BaseModel, Field

from src.construction.models.construction_report import ConstructionReport, SliceConstruction
from src.core.models import Molecule, PointId
from src.core.rationals import format_rational
from src.documents.molecule_document import TermDocument
from src.documents.rational_value import function_values
from src.freespace.models.results import MoleculeNorm
from src.metric.models.validation_report import ValidationReport
from src.trapezoid.models.scan_report import ScanReport
from src.trapezoid.models.trapezoid_check import TrapezoidCheck
from src.trapezoid.models.witness_query import WitnessResult


def _names(points: tuple[PointId, ...] | list[PointId]) -> list[str]:
    return [p.name for p in points]


class ViolationDocument(BaseModel):
    axiom: str
    points: list[str]
    lhs: str
    rhs: str


class ValidationDocument(BaseModel):
    kind: Literal["validation"] = "validation"
    ok: bool
    violations: list[ViolationDocument] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ValidationReport) -> "ValidationDocument":
        return cls(
            ok=report.ok,
            violations=[
                ViolationDocument(
                    axiom=v.axiom,
                    points=_names(v.points),
                    lhs=format_rational(v.lhs),
                    rhs=format_rational(v.rhs),
                )
                for v in report.violations
            ],
        )


class CheckDocument(BaseModel):
    kind: Literal["check"] = "check"
    inequality: Literal["ltp", "sym"]
    combined: bool
    epsilon: str
    u: str
    v: str
    holds: bool
    worst_tuple: list[str]
    slack: str
    lhs: str
    rhs: str

    @classmethod
    def from_check(cls, check: TrapezoidCheck) -> "CheckDocument":
        return cls(
            inequality=check.inequality,
            combined=check.combined,
            epsilon=format_rational(check.epsilon),
            u=check.u.name,
            v=check.v.name,
            holds=check.holds,
            worst_tuple=_names(check.worst_tuple),
            slack=format_rational(check.slack),
            lhs=format_rational(check.lhs),
            rhs=format_rational(check.rhs),
        )


class ScanPairDocument(BaseModel):
    check: CheckDocument
    sym_check: CheckDocument | None = None
    eps_ltp: str
    eps_sltp: str


class VerdictDocument(BaseModel):
    kind: Literal["witness_found", "all_pairs_fail"]
    pair: list[str] | None
    min_required_epsilon: str


class ScanDocument(BaseModel):
    kind: Literal["scan"] = "scan"
    mode: Literal["ltp", "sltp"]
    epsilon: str
    subset: list[str]
    pairs: list[ScanPairDocument]
    verdict: VerdictDocument
    assumptions: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ScanReport) -> "ScanDocument":
        return cls(
            mode=report.mode,
            epsilon=format_rational(report.epsilon),
            subset=_names(report.subset),
            pairs=[
                ScanPairDocument(
                    check=CheckDocument.from_check(check),
                    sym_check=(
                        CheckDocument.from_check(report.sym_checks[pair]) if pair in report.sym_checks else None
                    ),
                    eps_ltp=format_rational(report.required[pair].eps_ltp),
                    eps_sltp=format_rational(report.required[pair].eps_sltp),
                )
                for pair, check in report.results.items()
            ],
            verdict=VerdictDocument(
                kind=report.verdict.kind,
                pair=None if report.verdict.pair is None else _names(report.verdict.pair),
                min_required_epsilon=format_rational(report.verdict.min_required_epsilon),
            ),
            assumptions=list(report.assumptions),
        )


class WitnessDocument(BaseModel):
    kind: Literal["witness"] = "witness"
    mode: Literal["ltp", "sltp"]
    epsilon: str
    subset: list[str]
    found: bool
    pair: list[str] | None = None
    check: CheckDocument | None = None

    @classmethod
    def from_result(cls, result: WitnessResult, mode: str, epsilon, subset) -> "WitnessDocument":
        return cls(
            mode=mode,
            epsilon=format_rational(epsilon),
            subset=_names(subset),
            found=result.found,
            pair=None if result.pair is None else _names(result.pair),
            check=None if result.check is None else CheckDocument.from_check(result.check),
        )


class MoleculeNormDocument(BaseModel):
    kind: Literal["molecule_norm"] = "molecule_norm"
    terms: list[TermDocument]
    norm: str
    optimizer: dict[str, str]

    @classmethod
    def from_result(cls, mu: Molecule, result: MoleculeNorm) -> "MoleculeNormDocument":
        return cls(
            terms=[TermDocument(point=p.name, coeff=format_rational(c)) for p, c in mu.terms],
            norm=format_rational(result.norm),
            optimizer=function_values(result.optimizer.values),
        )


class RadiiDocument(BaseModel):
    r0: str
    s0: str
    r: str
    s: str
    u: str
    v: str


class IntervalDocument(BaseModel):
    a_low: str
    a_high: str
    b_low: str
    b_high: str
    lo: str
    hi: str


class SliceResultDocument(BaseModel):
    terms: list[TermDocument]
    alpha: str
    norm_of_functional: str
    h: dict[str, str]
    interval: IntervalDocument
    c: str
    f: dict[str, str]
    f_norm: str
    f_plus_g_norm: str
    f_minus_g_norm: str
    membership: str
    plus_membership: str
    minus_membership: str
    passed: bool

    @classmethod
    def from_construction(cls, item: SliceConstruction) -> "SliceResultDocument":
        interval = item.interval
        return cls(
            terms=[TermDocument(point=p.name, coeff=format_rational(c)) for p, c in item.slice.functional.terms],
            alpha=format_rational(item.slice.alpha),
            norm_of_functional=format_rational(item.slice.norm_of_functional),
            h=function_values(item.h.values),
            interval=IntervalDocument(
                a_low=format_rational(interval.a_low),
                a_high=format_rational(interval.a_high),
                b_low=format_rational(interval.b_low),
                b_high=format_rational(interval.b_high),
                lo=format_rational(interval.lo),
                hi=format_rational(interval.hi),
            ),
            c=format_rational(item.c),
            f=function_values(item.f.values),
            f_norm=format_rational(item.f_norm),
            f_plus_g_norm=format_rational(item.f_plus_g_norm),
            f_minus_g_norm=format_rational(item.f_minus_g_norm),
            membership=item.membership.value,
            plus_membership=item.plus_membership.value,
            minus_membership=item.minus_membership.value,
            passed=item.passed,
        )


class ConstructionDocument(BaseModel):
    kind: Literal["construction"] = "construction"
    status: Literal["passed", "failed", "witness_unavailable"]
    epsilon: str
    subset: list[str]
    pair: list[str] | None = None
    radii: RadiiDocument | None = None
    g: dict[str, str] | None = None
    g_norm: str | None = None
    slices: list[SliceResultDocument] = Field(default_factory=list)
    diagnostics: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ConstructionReport) -> "ConstructionDocument":
        radii = report.radii
        return cls(
            status=report.status.value,
            epsilon=format_rational(report.epsilon),
            subset=_names(report.subset),
            pair=None if report.pair is None else _names(report.pair),
            radii=None if radii is None else RadiiDocument(
                r0=format_rational(radii.r0),
                s0=format_rational(radii.s0),
                r=format_rational(radii.r),
                s=format_rational(radii.s),
                u=radii.u.name,
                v=radii.v.name,
            ),
            g=None if report.g is None else function_values(report.g.values),
            g_norm=None if report.g_norm is None else format_rational(report.g_norm),
            slices=[SliceResultDocument.from_construction(item) for item in report.slices],
            diagnostics=list(report.diagnostics),
        )


class ErrorDocument(BaseModel):
    kind: Literal["error"] = "error"
    error: str
    message: str
    location: str = ""
