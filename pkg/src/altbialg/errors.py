"""Exception types shared across the package."""


class AltBialgError(Exception):
    """Base class for all package errors."""


class SignatureMismatch(AltBialgError):
    """Tensor shapes / space signatures do not chain or match."""


class UnboundSlot(AltBialgError):
    """An expression references a tensor slot absent from the binding."""


class PrerequisiteFailed(AltBialgError):
    """A construction or check requires a prior check that did not pass."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class KindMismatch(AltBialgError):
    """A structure on A (+) V does not have the block shape of the requested kind."""


class BudgetExceeded(AltBialgError):
    """A bounded search exceeded its configured candidate cap."""


class DslError(AltBialgError):
    """Base class for input-document errors (exit code 2 territory)."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}: {message}" if column is None else f"line {line}, col {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class DslSyntaxError(DslError):
    """Malformed input text."""


class UnknownSpace(DslError):
    """A tensor or job references an undeclared space."""


class ShapeError(DslError):
    """A tensor literal does not fit its declared signature."""
