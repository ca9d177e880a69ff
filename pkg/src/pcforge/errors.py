"""Exception types shared across the package."""


class PcforgeError(Exception):
    """Base class for all package-specific errors."""


class DimacsError(PcforgeError):
    """Malformed DIMACS input. Carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TautologyError(PcforgeError):
    """A tautological clause reached an operation that rejects them."""


class EmptyClauseError(PcforgeError):
    """The empty clause reached an operation that rejects it."""


class UnsatisfiableError(PcforgeError):
    """An unsatisfiable formula reached an operation defined only for satisfiable input."""


class LimitError(PcforgeError):
    """An enumeration limit would be exceeded; the operation fails closed."""


class NotQHornError(PcforgeError):
    """The input formula admits no q-Horn valuation."""


class PreconditionError(PcforgeError):
    """An operation-specific precondition does not hold for the given input."""
