from loguru import logger
from rich.logging import RichHandler
from rich.console import Console
import os

from src.core.settings import AppSettings, load_settings

# Richのコンソール初期化
# レポートは stdout、ログは stderr に分ける
console = Console()
err_console = Console(stderr=True)


def setup_logger(settings: AppSettings | None = None):
    settings = settings or load_settings()

    # 既存のハンドラを削除
    logger.remove()

    # 1. コンソール出力 (RichHandlerを使用)
    # メッセージ中の [scan] 等のタグをマークアップとして解釈させない
    logger.add(
        RichHandler(console=err_console, rich_tracebacks=True, markup=False),
        format="{message}",
        level=settings.log_level
    )

    # 2. ファイル出力 (Loguru標準)
    if settings.log_file:
        log_dir = os.path.dirname(settings.log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        logger.add(
            settings.log_file,
            rotation="1 MB",
            retention="10 days",
            compression="zip",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
            level="DEBUG",
            encoding="utf-8"
        )

    return logger
