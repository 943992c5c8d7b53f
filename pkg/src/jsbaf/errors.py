"""Exception types shared across the package."""


class JsbafError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(JsbafError):
    """Malformed instance text.  Carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class EvaluationError(JsbafError):
    """A formula mentions an atom outside the interpretation's universe."""


class ResourceLimitError(JsbafError):
    """A configured bound (atom count, argument count, ...) was exceeded."""

    def __init__(self, message, bound_name=None, bound_value=None):
        self.bound_name = bound_name
        self.bound_value = bound_value
        super().__init__(message)


class InstanceError(JsbafError):
    """An operation received a structurally unusable instance."""
