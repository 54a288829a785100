"""Exception types shared across the package."""


class ChromabijError(Exception):
    """Base class for all errors raised by chromabij."""


class InvalidInputError(ChromabijError, ValueError):
    """An argument violates a type invariant (bad vertex, bad index, ...)."""


class PreconditionError(ChromabijError, ValueError):
    """An argument is well formed but outside an operation's domain."""


class BudgetExceededError(ChromabijError, RuntimeError):
    """An enumeration would exceed its configured budget."""


class ParseError(ChromabijError, ValueError):
    """A graph file could not be parsed.

    ``position`` is a 0-based character offset for graph6 input and a
    1-based line number for edge lists.
    """

    def __init__(self, message, position=None, unit="offset"):
        if position is not None:
            message = f"{message} ({unit} {position})"
        super().__init__(message)
        self.position = position
