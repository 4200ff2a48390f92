# src/core/settings.py

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field


class AppSettings(BaseModel):
    """
    実行時設定
    環境変数（.env を含む）から load_settings() で読み込みます。
    """
    # コンソールのログレベル
    log_level: str = Field(default="INFO", description="コンソールに出すログのレベル")

    # ファイルログ（空文字なら出力しない）
    log_file: str = Field(default="logs/sltp.log", description="ログファイルのパス")

    # 出力形式
    output_format: Literal["human", "machine"] = Field(default="human", description="レポートの既定の出力形式")

    # 輸送シンプレックスのピボット上限
    transport_max_pivots: int = Field(default=10000, ge=1, description="輸送問題ソルバーのピボット回数の上限")


def load_settings() -> AppSettings:
    load_dotenv()
    return AppSettings(
        log_level=os.getenv("SLTP_LOG_LEVEL", "INFO"),
        log_file=os.getenv("SLTP_LOG_FILE", "logs/sltp.log"),
        output_format=os.getenv("SLTP_OUTPUT_FORMAT", "human"),
        transport_max_pivots=int(os.getenv("SLTP_TRANSPORT_MAX_PIVOTS", "10000")),
    )


@lru_cache(maxsize=1)
def get_settings() -> AppSettings:
    """プロセス内で共有する設定（初回だけ環境変数を読む）"""
    return load_settings()
