# src/documents/load_document.py
import sys
from pathlib import Path
from typing import TypeVar

from loguru import logger
from pydantic import BaseModel, ValidationError

from src.core.errors import DocumentError

DocumentT = TypeVar("DocumentT", bound=BaseModel)


def read_input(path: str) -> str:
    """パス "-" は標準入力"""
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"ファイルを読めません: {e}", path) from None


def load_document(path: str, model: type[DocumentT]) -> DocumentT:
    text = read_input(path)
    try:
        document = model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "(root)"
        raise DocumentError(first["msg"], f"{path}:{location}") from None

    logger.debug(f"[document] {path} を {model.__name__} として読み込みました")
    return document
