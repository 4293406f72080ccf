"""Exception hierarchy for hbk."""


class HbkError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTable(HbkError, ValueError):
    pass


class NonUnitParameter(HbkError, ValueError):
    pass


class NotABijection(HbkError, ValueError):
    pass


class ParseError(HbkError, ValueError):
    """Syntax error in one of the text formats; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(HbkError, ValueError):
    """A diagram violates the exactly-once slot rule or has an id out of range."""

    def __init__(self, message, semiarc=None):
        self.semiarc = semiarc
        super().__init__(message)


class IterationCapExceeded(HbkError, RuntimeError):
    pass


class DomainProductMismatch(HbkError, ValueError):
    pass


class StructureDiagramMismatch(HbkError, ValueError):
    pass


class UnknownFixture(HbkError, KeyError):
    pass


class InconsistentProjection(HbkError, RuntimeError):
    """A lifted coloring projected to a labeling that is not a group coloring."""
