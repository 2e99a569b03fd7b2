"""Command-line interface."""

from .commands import main
from .dot import emit_dot

__all__ = ["emit_dot", "main"]
