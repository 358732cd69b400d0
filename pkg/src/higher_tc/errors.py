"""Exception hierarchy shared by all modules."""


class HigherTCError(Exception):
    pass


class ParseError(HigherTCError, ValueError):
    """Malformed input text. Carries the 1-based line (and column when known)."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", column {col}"
            where += ": "
        super().__init__(where + message)


class DomainError(HigherTCError, ValueError):
    pass


class AlgebraError(HigherTCError, ValueError):
    """An algebra or model violates a structural invariant."""


class ResourceError(HigherTCError, RuntimeError):
    pass


class InsufficientTruncation(HigherTCError, RuntimeError):
    def __init__(self, message, required_degree=None):
        self.required_degree = required_degree
        super().__init__(message)


class ContradictionError(HigherTCError, ValueError):
    """Bounds computed from the inputs are inconsistent (lower > upper)."""
