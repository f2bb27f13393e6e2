"""Exception hierarchy shared by the library and the command line."""


class ScxError(Exception):
    """Base class for every error raised by scx."""


class InputError(ScxError, ValueError):
    """Malformed arguments: unknown alternatives, bad indices, mismatched sets."""


class DomainError(ScxError):
    """A rule was evaluated on a profile outside its declared domain."""


class ResourceLimitError(ScxError):
    """An exhaustive enumeration would exceed the configured visit ceiling."""


class ParseError(ScxError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClaimFailure(ScxError):
    """A mechanized theorem check produced a result contradicting the claim."""
