# src/construction/build_symmetric_witnesses.py
from typing import Sequence

from loguru import logger

from src.construction.admissible_interval import admissible_interval
from src.construction.build_bump import build_bump
from src.construction.compute_radii import compute_radii
from src.construction.helpers.as_construction_epsilon import as_construction_epsilon
from src.construction.models.construction_report import ConstructionReport, ConstructionStatus, SliceConstruction
from src.construction.pick_interior_function import pick_interior_function
from src.core.errors import InternalInvariantError, PreconditionError
from src.core.models import LipschitzFunction, PartialFunction, PointId, PointedMetricSpace, WeakStarSlice
from src.core.rationals import Rational
from src.freespace.lip_norm import lip_norm
from src.freespace.slice_contains import slice_contains
from src.freespace.sup_extend import sup_extend
from src.metric.open_ball import open_ball
from src.trapezoid.find_witness import find_witness
from src.trapezoid.models.witness_query import WitnessQuery


def _assert_chain(c, r, low, high, label: str) -> None:
    # c - r ∈ [low, high - 2r] かつ c + r ∈ [low + 2r, high]
    if not (low <= c - r <= high - 2 * r and low + 2 * r <= c + r <= high):
        raise InternalInvariantError(f"{label} 側の不等式の連鎖が崩れています (c={c}, 半径={r}, [{low}, {high}])")


def _assert_on_l(space: PointedMetricSpace, f_l: PartialFunction, g_l: PartialFunction) -> None:
    for label, combined in (
            ("f+g", f_l + g_l),
            ("f-g", f_l - g_l),
            ("f+|g|", f_l + abs(g_l)),
            ("f-|g|", f_l - abs(g_l)),
    ):
        constant = lip_norm(space, combined)
        if constant.value > 1:
            raise InternalInvariantError(f"L 上で ‖{label}‖ = {constant.value} > 1 (ペア {constant.pair})")


def build_symmetric_witnesses(
        space: PointedMetricSpace,
        slices: Sequence[WeakStarSlice],
        epsilon: Rational,
) -> ConstructionReport:
    """
    スライス S_1..S_n に対して、共通の g と f_i ∈ S_i を ‖f_i ± g‖ ≤ 1、‖g‖ ≥ (1-ε)² となるように作る

    1. 各スライスで ‖h_i‖ < 1-ε の内点 h_i を選ぶ
    2. N = {0} ∪ 各分子の台 について対称版の証人ペア (u, v) を探す
    3. 半径 r, s と g を作り、L = N ∪ B(u,r) ∪ B(v,s) 上で f_i を h_i と定数 c_i から組み立てる
    4. 重み |g| 付きの sup 公式で M 全体へ延長し、すべての条件を厳密に検証する
    """
    eps = as_construction_epsilon(epsilon)
    if not slices:
        raise PreconditionError("スライスが 1 枚もありません")
    min_alpha = min(s.alpha for s in slices)
    if eps >= min_alpha:
        raise PreconditionError(f"ε = {eps} は min α = {min_alpha} 未満である必要があります")

    support: set[PointId] = {space.base}
    for s in slices:
        support.update(space.require(p) for p in s.functional.support)
    nodes = tuple(sorted(support))
    logger.debug(f"[construct] |N|={len(nodes)} ε={eps} スライス {len(slices)} 枚")

    interiors = [pick_interior_function(space, s, eps) for s in slices]

    witness = find_witness(space, WitnessQuery(subset=nodes, epsilon=eps), "sltp")
    if not witness.found:
        message = f"この有限空間には (N, ε={eps}) に対する対称版の証人ペアがありません"
        logger.info(f"[construct] {message}")
        return ConstructionReport(
            status=ConstructionStatus.WITNESS_UNAVAILABLE,
            epsilon=eps,
            subset=nodes,
            diagnostics=(message,),
        )

    radii = compute_radii(space, nodes, eps, *witness.pair)
    u, v = radii.u, radii.v
    g = build_bump(space, u, v, radii)

    balls = open_ball(space, u, radii.r) | open_ball(space, v, radii.s)
    if balls & set(nodes):
        raise InternalInvariantError("球 B(u,r) ∪ B(v,s) が N と交わっています")
    domain = sorted(set(nodes) | balls)
    g_l = g.restrict(domain)

    constructions = []
    for s, h in zip(slices, interiors):
        interval = admissible_interval(space, h, nodes, u, v, radii, epsilon=eps)
        c = interval.midpoint
        _assert_chain(c, radii.r, interval.a_low, interval.a_high, "u")
        _assert_chain(c, radii.s, interval.b_low, interval.b_high, "v")

        f_l = PartialFunction({x: h(x) if x in support else c for x in domain})
        _assert_on_l(space, f_l, g_l)
        f = sup_extend(space, f_l, g_l)

        constructions.append(SliceConstruction(
            slice=s,
            h=h,
            interval=interval,
            c=c,
            f=f,
            f_norm=lip_norm(space, f).value,
            f_plus_g_norm=lip_norm(space, f + g).value,
            f_minus_g_norm=lip_norm(space, f - g).value,
            membership=slice_contains(space, s, f),
            plus_membership=slice_contains(space, s, f + g),
            minus_membership=slice_contains(space, s, f - g),
        ))

    g_norm = lip_norm(space, g).value
    diagnostics = []
    if not ((1 - eps) ** 2 <= g_norm <= 1):
        diagnostics.append(f"‖g‖ = {g_norm} が [(1-ε)², 1] = [{(1 - eps) ** 2}, 1] にありません")
    for i, item in enumerate(constructions):
        if not item.passed:
            diagnostics.append(
                f"スライス {i}: ‖f‖={item.f_norm}, 所属={item.membership.value}, "
                f"‖f+g‖={item.f_plus_g_norm}, ‖f-g‖={item.f_minus_g_norm}"
            )

    status = ConstructionStatus.FAILED if diagnostics else ConstructionStatus.PASSED
    if status == ConstructionStatus.FAILED:
        logger.error(f"[construct] 検証に失敗しました: {'; '.join(diagnostics)}")
    else:
        logger.info(f"[construct] ({u}, {v}) で構成に成功しました (‖g‖ = {g_norm})")

    return ConstructionReport(
        status=status,
        epsilon=eps,
        subset=nodes,
        pair=(u, v),
        radii=radii,
        g=g,
        g_norm=g_norm,
        slices=tuple(constructions),
        diagnostics=tuple(diagnostics),
    )
