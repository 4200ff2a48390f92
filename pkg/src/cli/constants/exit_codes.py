# src/cli/constants/exit_codes.py
EXIT_OK: int = 0
# 判定が成り立たない・証人がない等、正しく計算できた否定的な結果
EXIT_NEGATIVE: int = 1
EXIT_USAGE: int = 2
EXIT_INTERNAL: int = 3
