# src/construction/pick_interior_function.py
from src.core.errors import PreconditionError
from src.core.models import LipschitzFunction, PointedMetricSpace, WeakStarSlice
from src.core.rationals import Rational, as_rational
from src.freespace.molecule_norm import molecule_norm


def pick_interior_function(space: PointedMetricSpace, s: WeakStarSlice, epsilon: Rational) -> LipschitzFunction:
    """
    スライスの中にあって ‖h‖ < 1-ε となる h を選ぶ
    h = (1-ε-η)·f*、η = (α-ε)/2。f* は μ/‖μ‖ の双対最適解なので ‖h‖ = ⟨h, μ/‖μ‖⟩ = 1-ε-η > 1-α です。
    """
    eps = as_rational(epsilon, "epsilon")
    if not (0 <= eps < s.alpha):
        raise PreconditionError(f"ε は 0 ≤ ε < α = {s.alpha} を満たす必要があります: {eps}")

    eta = (s.alpha - eps) / 2
    normalized = s.functional.scaled(1 / s.norm_of_functional)
    optimizer = molecule_norm(space, normalized).optimizer
    return optimizer.scaled(1 - eps - eta)
