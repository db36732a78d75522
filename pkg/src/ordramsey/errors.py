"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument is outside the domain an operation accepts."""


class SizeError(ValueError):
    """A requested object is too large to enumerate."""


class FormatError(ValueError):
    """Malformed serialized input (graph6, DIMACS, permutations)."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class SolverEnvironmentError(RuntimeError):
    """The external SAT solver could not be started."""


class ConsistencyError(RuntimeError):
    """The embedding oracle rejected a model the encoder claimed was valid."""
