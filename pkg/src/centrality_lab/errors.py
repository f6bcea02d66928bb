"""Exception hierarchy shared by every module of the package."""


class CentralityLabError(Exception):
    """Base class for all errors raised by centrality_lab."""


class InvalidNode(CentralityLabError, ValueError):
    pass


class SelfLoop(CentralityLabError, ValueError):
    pass


class DuplicateEdge(CentralityLabError, ValueError):
    pass


class NotAPermutation(CentralityLabError, ValueError):
    pass


class BudgetExceeded(CentralityLabError, ValueError):
    """The requested enumeration or search is outside the supported range."""


class InvalidParameter(CentralityLabError, ValueError):
    pass


class InvalidArguments(CentralityLabError, ValueError):
    pass


class ConvergenceFailure(CentralityLabError, RuntimeError):
    pass


class UnknownMeasure(CentralityLabError, KeyError):
    pass


class UnknownFixture(CentralityLabError, KeyError):
    pass


class ParseError(CentralityLabError, ValueError):
    """Malformed graph text. ``line`` is 1-based, or None for whole-document errors."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
