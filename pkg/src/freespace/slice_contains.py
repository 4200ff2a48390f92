# src/freespace/slice_contains.py
from src.core.models import LipschitzFunction, PointedMetricSpace, WeakStarSlice
from src.freespace.evaluate_pairing import evaluate_pairing
from src.freespace.lip_norm import lip_norm
from src.freespace.models.results import SliceMembership


def slice_contains(space: PointedMetricSpace, s: WeakStarSlice, f: LipschitzFunction) -> SliceMembership:
    if lip_norm(space, f).value > 1:
        return SliceMembership.OUTSIDE_BALL
    if evaluate_pairing(f, s.functional) / s.norm_of_functional > 1 - s.alpha:
        return SliceMembership.INSIDE
    return SliceMembership.OUTSIDE_SLICE
