# src/families/gen_ex2.py
from src.core.errors import PreconditionError
from src.core.models import PointedMetricSpace
from src.families.helpers.two_valued_space import two_valued_space


def gen_ex2(k: int) -> PointedMetricSpace:
    """
    {a, b} ∪ {u_i, v_i} (i = 1..k)
    d(a, u_i) = d(b, v_i) = d(u_i, v_i) = 1、それ以外の相異なる点は 2、基点は a。
    対称版の不等式は満たすが、台形不等式が成り立たない例です。
    """
    if k < 1:
        raise PreconditionError(f"k は 1 以上で指定してください: {k}")

    names = ["a", "b"] + [f"u{i}" for i in range(1, k + 1)] + [f"v{i}" for i in range(1, k + 1)]

    def is_near(p: str, q: str) -> bool:
        if p == "a" and q[0] == "u":
            return True
        if p == "b" and q[0] == "v":
            return True
        return p[0] == "u" and q[0] == "v" and p[1:] == q[1:]

    return two_valued_space(names, is_near)
