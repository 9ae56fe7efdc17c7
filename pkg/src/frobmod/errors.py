"""Exception types shared across the package."""


class ContextMismatch(ValueError):
    """Operands live over different rings, semantics, or module shapes."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; the result cannot be trusted."""


class ParseError(ValueError):
    """Malformed input text, with an optional 1-based line/column location."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)
