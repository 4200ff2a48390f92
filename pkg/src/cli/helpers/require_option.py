# src/cli/helpers/require_option.py
from src.core.errors import UsageError


def require_option(value, flag: str, subcommand: str):
    if value is None:
        raise UsageError(f"{subcommand} には {flag} が必要です")
    return value
