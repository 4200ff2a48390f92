# src/cli/__init__.py
from src.cli.models.invocation import Invocation, RunResult
from src.cli.run import run

__all__ = ["Invocation", "RunResult", "run"]
