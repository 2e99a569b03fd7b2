"""Logging utilities for decision procedures with structured logging and timing."""

import functools
import logging
import time
from collections.abc import Callable
from typing import Any, ParamSpec, TypeVar

P = ParamSpec("P")
R = TypeVar("R")


def get_operation_context(operation: str, args: tuple[Any, ...]) -> dict[str, Any]:
    """Build logging context for an operation call.

    Args:
        operation: Name of the operation being run.
        args: Positional arguments of the call.

    Returns:
        Dictionary with logging context.
    """
    context: dict[str, Any] = {"operation": operation}

    signatures = {str(sig) for sig in (getattr(arg, "sig", None) for arg in args) if sig is not None}
    if signatures:
        context["signature"] = ", ".join(sorted(signatures))

    sizes = [len(arg.domain) for arg in args if hasattr(arg, "domain")]
    if sizes:
        context["symbol_sizes"] = sizes

    return context


def log_operation(operation: str) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Decorator to log operation entry, exit, and timing.

    Args:
        operation: Name of the operation for logging.

    Returns:
        Decorated function with logging.
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            logger = logging.getLogger(func.__module__)
            context = get_operation_context(operation, args)
            logger.debug(
                f"[{operation}] started",
                extra={"thompson_context": {**context, "event": "operation_started"}},
            )

            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                duration_ms = (time.perf_counter() - start_time) * 1000
                logger.warning(
                    f"[{operation}] failed: {e}",
                    extra={
                        "thompson_context": {
                            **context,
                            "duration_ms": round(duration_ms, 2),
                            "error": str(e),
                            "error_type": type(e).__name__,
                            "event": "operation_failed",
                        }
                    },
                )
                raise

            duration_ms = (time.perf_counter() - start_time) * 1000
            logger.debug(
                f"[{operation}] completed in {duration_ms:.2f}ms",
                extra={
                    "thompson_context": {**context, "duration_ms": round(duration_ms, 2), "event": "operation_completed"}
                },
            )
            return result

        return wrapper

    return decorator


def log_search_progress(logger: logging.Logger, procedure: str, steps: int, limit: int) -> None:
    """Log progress of a bounded search.

    Args:
        logger: Logger instance.
        procedure: Name of the search.
        steps: Steps spent so far.
        limit: Configured cap.
    """
    logger.debug(
        f"[{procedure}] {steps}/{limit} steps",
        extra={"thompson_context": {"procedure": procedure, "steps": steps, "limit": limit, "event": "search_progress"}},
    )


def log_decision(logger: logging.Logger, procedure: str, verdict: str, **details: Any) -> None:
    """Log the outcome of a decision procedure.

    Args:
        logger: Logger instance.
        procedure: Name of the procedure, e.g. "conjugate".
        verdict: Short outcome, e.g. "conjugate" or "not-conjugate".
        **details: Extra fields such as the failing gate or pair counts.
    """
    suffix = " ".join(f"{key}={value}" for key, value in details.items())
    logger.info(
        f"[{procedure}] {verdict}" + (f" ({suffix})" if suffix else ""),
        extra={"thompson_context": {"procedure": procedure, "verdict": verdict, **details, "event": "decision"}},
    )
