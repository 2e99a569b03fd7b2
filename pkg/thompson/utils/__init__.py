"""Shared utilities."""

from .logging_utils import get_operation_context, log_decision, log_operation, log_search_progress

__all__ = [
    "get_operation_context",
    "log_decision",
    "log_operation",
    "log_search_progress",
]
