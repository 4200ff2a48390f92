# tests/conftest.py
"""
pytest fixtures for SLTPLab tests
"""

import os
from fractions import Fraction

import pytest

# 環境変数の設定（ファイルログを出さず、コンソールも警告以上だけにする）
os.environ.setdefault("SLTP_LOG_LEVEL", "WARNING")
os.environ.setdefault("SLTP_LOG_FILE", "")
os.environ.setdefault("SLTP_OUTPUT_FORMAT", "human")
os.environ.setdefault("SLTP_TRANSPORT_MAX_PIVOTS", "10000")

from src.core.models import PointedMetricSpace  # noqa: E402
from src.families import gen_ex1, gen_ex2, gen_l1_basis  # noqa: E402
from src.metric import build_from_matrix  # noqa: E402
from src.utils.logger import setup_logger  # noqa: E402


@pytest.fixture(scope="session", autouse=True)
def configure_logger():
    """CLI を通さない呼び出しでも上の環境変数どおりのロガーにする"""
    setup_logger()


def pts(space: PointedMetricSpace, *names: str):
    """名前から PointId のリストを引く"""
    return space.points_named(names)


@pytest.fixture
def ex1_1() -> PointedMetricSpace:
    return gen_ex1(1)


@pytest.fixture
def ex1_5() -> PointedMetricSpace:
    return gen_ex1(5)


@pytest.fixture
def ex2_1() -> PointedMetricSpace:
    return gen_ex2(1)


@pytest.fixture
def ex2_3() -> PointedMetricSpace:
    return gen_ex2(3)


@pytest.fixture
def l1_basis_4() -> PointedMetricSpace:
    return gen_l1_basis(4)


@pytest.fixture
def l1_basis_8() -> PointedMetricSpace:
    return gen_l1_basis(8)


@pytest.fixture
def two_point_space() -> PointedMetricSpace:
    """d(0, p) = 2 の 2 点空間"""
    return build_from_matrix(["0", "p"], "0", [[0, 2], [2, 0]])


@pytest.fixture
def broken_triangle() -> PointedMetricSpace:
    """d(a,b) = d(b,c) = 1, d(a,c) = 3 で三角不等式が破れている"""
    return build_from_matrix(["a", "b", "c"], "a", [[0, 1, 3], [1, 0, 1], [3, 1, 0]])


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)


@pytest.fixture
def line_space() -> PointedMetricSpace:
    """0 - u - v が一直線に並んだ 3 点空間"""
    return build_from_matrix(["0", "u", "v"], "0", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
