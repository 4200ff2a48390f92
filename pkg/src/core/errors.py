# src/core/errors.py


class SltpLabError(Exception):
    """SLTPLab が送出する例外の基底クラス"""


class StructuralError(SltpLabError):
    """空間の形そのものが壊れている（非正方行列、名前の重複、基点なし等）"""


class DocumentError(SltpLabError):
    """入力ドキュメントを読めない・解釈できない"""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class PreconditionError(SltpLabError):
    """操作の事前条件を満たしていない"""


class InternalInvariantError(SltpLabError):
    """証明済みの不変条件が崩れた（実装のバグを意味する）"""


class UsageError(SltpLabError):
    """コマンドの引数が足りない、または組み合わせが正しくない"""
