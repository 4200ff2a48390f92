# src/families/gen_ex1.py
from src.core.errors import PreconditionError
from src.core.models import PointedMetricSpace
from src.families.helpers.two_valued_space import two_valued_space


def gen_ex1(k: int) -> PointedMetricSpace:
    """
    {a1, a2, b1, b2} ∪ {u_i, v_i} (i = 1..k)
    d(a_i, b_j) = d(a_i, u_l) = d(b_i, v_l) = d(u_l, v_l) = 1、それ以外の相異なる点は 2、基点は a1。
    台形性は持つが、対称版の不等式は満たさない例です。
    """
    if k < 1:
        raise PreconditionError(f"k は 1 以上で指定してください: {k}")

    names = ["a1", "a2", "b1", "b2"] + [f"u{i}" for i in range(1, k + 1)] + [f"v{i}" for i in range(1, k + 1)]

    def is_near(p: str, q: str) -> bool:
        if p[0] == "a" and q[0] in "bu":
            return True
        if p[0] == "b" and q[0] == "v":
            return True
        return p[0] == "u" and q[0] == "v" and p[1:] == q[1:]

    return two_valued_space(names, is_near)
