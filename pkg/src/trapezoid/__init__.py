# src/trapezoid/__init__.py
from src.trapezoid.check_ineq_ltp import check_ineq_ltp
from src.trapezoid.check_ineq_sym import check_ineq_sym
from src.trapezoid.check_sltp import check_sltp
from src.trapezoid.counterexample_scan import counterexample_scan
from src.trapezoid.find_witness import find_witness
from src.trapezoid.models.scan_report import ScanReport, ScanVerdict
from src.trapezoid.models.trapezoid_check import RequiredEpsilon, TrapezoidCheck
from src.trapezoid.models.witness_query import WitnessQuery, WitnessResult
from src.trapezoid.required_epsilon import required_epsilon

__all__ = [
    "RequiredEpsilon",
    "ScanReport",
    "ScanVerdict",
    "TrapezoidCheck",
    "WitnessQuery",
    "WitnessResult",
    "check_ineq_ltp",
    "check_ineq_sym",
    "check_sltp",
    "counterexample_scan",
    "find_witness",
    "required_epsilon",
]
