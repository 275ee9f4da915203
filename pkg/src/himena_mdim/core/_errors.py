from __future__ import annotations


class GraphError(ValueError):
    """Raised when a graph cannot be built or used as requested."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation needs a connected graph."""


class GraphFormatError(ValueError):
    """Raised when a textual graph or family description is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
