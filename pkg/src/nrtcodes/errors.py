"""Exception hierarchy shared by the library and the CLI."""


class NrtError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class FieldError(NrtError, ArithmeticError):
    pass


class DimensionError(NrtError, ValueError):
    pass


class CapExceededError(NrtError):
    """An enumeration would exceed the configured cap."""


class CodeFormatError(NrtError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VerificationError(NrtError, AssertionError):
    """A computed object failed a property it must satisfy."""


class NoSolutionError(NrtError):
    pass
