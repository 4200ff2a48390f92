# src/construction/models/admissible_interval.py
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AdmissibleInterval:
    # a_low = max_N (h - d(·,u)), a_high = min_N (h + d(·,u))。b_* は v について同様
    a_low: Fraction
    a_high: Fraction
    b_low: Fraction
    b_high: Fraction
    lo: Fraction
    hi: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2
