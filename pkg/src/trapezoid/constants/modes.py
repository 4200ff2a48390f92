# src/trapezoid/constants/modes.py
from typing import Literal

# 探索・スキャンで使う性質
Mode = Literal["ltp", "sltp"]

# 個々の不等式: ltp = 台形不等式, sym = 対称版 (u, v 両側に 2 点ずつ)
Inequality = Literal["ltp", "sym"]
