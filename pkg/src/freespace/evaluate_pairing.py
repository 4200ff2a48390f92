# src/freespace/evaluate_pairing.py
from fractions import Fraction

from src.core.models import LipschitzFunction, Molecule, PartialFunction


def evaluate_pairing(f: LipschitzFunction | PartialFunction, mu: Molecule) -> Fraction:
    return sum((coeff * f(p) for p, coeff in mu.terms), Fraction(0))
