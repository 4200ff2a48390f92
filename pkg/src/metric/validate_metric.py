# src/metric/validate_metric.py
from fractions import Fraction

from loguru import logger

from src.core.errors import StructuralError
from src.core.models import PointedMetricSpace
from src.metric.models.validation_report import ValidationReport, Violation


def validate_metric(space: PointedMetricSpace) -> ValidationReport:
    """
    距離の公理をすべて確認し、違反を漏れなく列挙する
    形が壊れている場合（行列が正方でない、基点がない）は StructuralError を送出します。
    """
    n = len(space.points)
    if len(space.dist) != n or any(len(row) != n for row in space.dist):
        raise StructuralError(f"距離行列の形が点の数 {n} と一致しません")
    if space.base not in space:
        raise StructuralError(f"基点 {space.base} が点の一覧にありません")

    pts, d = space.points, space.dist
    zero = Fraction(0)
    violations: list[Violation] = []

    for i in range(n):
        if d[i][i] != 0:
            violations.append(Violation("zero_diagonal", (pts[i],), d[i][i], zero))
        for j in range(n):
            if i != j and d[i][j] < 0:
                violations.append(Violation("nonnegativity", (pts[i], pts[j]), d[i][j], zero))

    for i in range(n):
        for j in range(i + 1, n):
            if d[i][j] == 0 or d[j][i] == 0:
                violations.append(Violation("separation", (pts[i], pts[j]), min(d[i][j], d[j][i]), zero))
            if d[i][j] != d[j][i]:
                violations.append(Violation("symmetry", (pts[i], pts[j]), d[i][j], d[j][i]))

    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                if j == i or j == k:
                    continue
                rhs = d[i][j] + d[j][k]
                if d[i][k] > rhs:
                    violations.append(Violation("triangle", (pts[i], pts[k], pts[j]), d[i][k], rhs))

    report = ValidationReport(tuple(violations))
    if report.ok:
        logger.debug(f"[metric] {n} 点の空間は距離の公理を満たしています")
    else:
        logger.debug(f"[metric] 公理違反が {len(violations)} 件見つかりました")
    return report
