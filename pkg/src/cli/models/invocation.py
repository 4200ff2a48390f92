# src/cli/models/invocation.py
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, Field

Subcommand = Literal[
    "validate", "example", "check-ltp", "check-sltp", "scan", "witness", "molecule-norm", "construct",
]


class Invocation(BaseModel):
    """CLI の 1 回の呼び出し（typer を通さずに run() へ渡せる）"""
    subcommand: Subcommand
    space: str = Field(default="-", description="空間ファイルのパス（- は標準入力）")
    family: str | None = Field(default=None, description="example で生成する族")
    subset: str | None = Field(default=None, description="N の点の名前（カンマ区切り）")
    eps: str | None = Field(default=None, description="ε")
    alpha: str | None = Field(default=None, description="スライスの幅 α")
    pair: str | None = Field(default=None, description="判定するペア u,v")
    scan: bool = Field(default=False, description="全ペアをスキャンする")
    mode: Literal["ltp", "sltp"] = Field(default="sltp", description="scan / witness で使う性質")
    output_format: Literal["human", "machine"] = Field(default="human", description="出力形式")
    seed: int = Field(default=0, description="ランダムな族の乱数シード")
    k: int | None = Field(default=None, description="ex1 / ex2 の k")
    m: int | None = Field(default=None, description="l1_basis の m")
    n: int | None = Field(default=None, description="ランダムな族の点の数")
    molecule: str | None = Field(default=None, description="分子ファイルのパス")
    slices: str | None = Field(default=None, description="スライスファイルのパス")


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    document: BaseModel
