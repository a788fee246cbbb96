"""Exception hierarchy shared by the library and the command line."""


class SymqError(Exception):
    """Base class for every error raised by symq."""


class MalformedTableError(SymqError, ValueError):
    """An operation table or permutation has the wrong shape or entries."""


class SizeGuardError(SymqError):
    """A brute-force search was refused because the input is too large."""


class ParseError(SymqError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SchemaError(SymqError, ValueError):
    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class PresentationError(SymqError, ValueError):
    """Invalid presentation data or an elimination that cannot be performed."""


class DiagramError(SymqError, ValueError):
    """Invalid diagram data, or a diagram that violates an operation's precondition."""
