# src/trapezoid/helpers/as_epsilon.py
from fractions import Fraction

from src.core.errors import PreconditionError
from src.core.rationals import Rational, as_rational


def as_epsilon(epsilon: Rational) -> Fraction:
    eps = as_rational(epsilon, "epsilon")
    if not (0 <= eps < 1):
        raise PreconditionError(f"ε は [0, 1) の範囲で指定してください: {eps}")
    return eps
