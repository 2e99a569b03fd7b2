"""Exceptions raised by the thompson package."""


class ThompsonError(Exception):
    """Base class for every error raised by this package.

    Attributes:
        message: Human-readable description of the failure
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class SignatureError(ThompsonError):
    """Raised for an invalid (n, r) pair or a token outside the signature."""


class WordSyntaxError(ThompsonError):
    """Raised when text cannot be tokenised or parsed.

    Attributes:
        message: Error message describing the failure
        line: 1-based line number in the source file, if known
        column: 1-based token column, if known
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        location = []
        if self.line is not None:
            location.append(f"line {self.line}")
        if self.column is not None:
            location.append(f"column {self.column}")
        if location:
            return f"{self.message} ({', '.join(location)})"
        return self.message


class InvalidWordError(ThompsonError):
    """Raised when an Omega-row fails the valency criterion."""


class NotABasisError(ThompsonError):
    """Raised when a set of words is not a free basis (or not an A-basis where one is required)."""


class SearchLimitExceeded(ThompsonError):
    """Raised when a bounded search runs out of steps.

    This never stands for a negative answer: the caller must treat the
    question as undecided and may retry with a larger limit.

    Attributes:
        message: Error message describing the failure
        procedure: Name of the search that gave up
        steps: Number of steps spent before giving up
    """

    def __init__(self, message: str, procedure: str = "", steps: int = 0):
        super().__init__(message)
        self.procedure = procedure
        self.steps = steps

    def __str__(self) -> str:
        if self.procedure:
            return f"{self.message} [{self.procedure} after {self.steps} steps]"
        return self.message


class NotPeriodicError(ThompsonError):
    """Raised when an operation restricted to periodic automorphisms gets an infinite-order one."""


class NotRegularInfiniteError(ThompsonError):
    """Raised when an operation restricted to regular infinite automorphisms gets one with periodic points."""
