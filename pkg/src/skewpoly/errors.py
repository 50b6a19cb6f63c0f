"""Exception types shared across the library."""


class SkewPolyError(Exception):
    """Base class for all library errors."""


class InvalidShape(SkewPolyError):
    """Raised when a partition pair does not describe a skew shape."""


class InvalidBound(SkewPolyError):
    """Raised when a variable or degree budget is out of range."""


class InvalidArg(SkewPolyError):
    """Raised for arguments outside an operation's documented domain."""


class ParseError(InvalidArg):
    """Raised when shape or ribbon text cannot be parsed.

    The offending token is kept on the exception so command line
    diagnostics can name it.
    """

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class IncomparableTruncation(SkewPolyError):
    """Raised when two polynomial truncations cannot be compared soundly."""


class NotSymmetric(SkewPolyError):
    """Raised when coefficient data fails a symmetry consistency check."""
