# backend/app/utils/errors.py
from typing import Optional


class PDominationError(Exception):
    """Base class for every error raised by the solver, oracles and parsers."""


class InvalidArgumentError(PDominationError, ValueError):
    pass


class PreconditionError(PDominationError, ValueError):
    pass


class ResourceLimitError(PDominationError, RuntimeError):
    """A configured cap was exceeded. Work is refused, never truncated."""


class ParseError(PDominationError, ValueError):
    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        self.position = position
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        elif position is not None:
            message = f"entry {position}: {message}"
        super().__init__(message)
