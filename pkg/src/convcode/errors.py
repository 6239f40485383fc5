"""Shared exception types."""


class ParseError(ValueError):
    """Malformed generator-matrix file; message carries line/column context."""


class LimitError(RuntimeError):
    """A configured resource ceiling was exceeded (state space, search budget,
    truncation order too small to decide)."""
