# src/construction/helpers/as_construction_epsilon.py
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.rationals import Rational, as_rational


def as_construction_epsilon(epsilon: Rational) -> Fraction:
    """構成では ε = 0 を許さない (0 < ε < 1)"""
    eps = as_rational(epsilon, "epsilon")
    if not (0 < eps < 1):
        raise PreconditionError(f"構成の ε は (0, 1) の範囲で指定してください: {eps}")
    return eps
