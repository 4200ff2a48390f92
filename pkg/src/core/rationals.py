# src/core/rationals.py

from fractions import Fraction

from src.core.errors import DocumentError

Rational = Fraction | int | str


def as_rational(value: Rational, location: str = "") -> Fraction:
    """"p/q"・整数・10進文字列を厳密な有理数に変換する（float は受け付けない）"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"有理数は文字列か整数で指定してください: {value!r}", location)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"有理数として解釈できません: {value!r}", location) from None
    raise DocumentError(f"有理数として解釈できません: {value!r}", location)


def format_rational(value: Fraction) -> str:
    # 既約の "p/q"（整数は "p"）
    return str(Fraction(value))
