"""Exception hierarchy for the aqpnn package."""


class AQPNNError(Exception):
    """Base class for all errors raised by aqpnn."""


class LengthMismatch(AQPNNError, ValueError):
    pass


class NoRealSolution(AQPNNError, ValueError):
    """The target amplitude exceeds the weighted-sum norm; no real angle exists."""


class ZeroWeightedSum(AQPNNError, ValueError):
    pass


class NonConvergence(AQPNNError, RuntimeError):
    def __init__(self, max_epochs: int, offending: tuple[int, ...] = ()):
        self.max_epochs = max_epochs
        self.offending = offending
        super().__init__(
            f"training did not converge within {max_epochs} epochs "
            f"({len(offending)} pattern(s) still in conflict)"
        )


class InvalidPattern(AQPNNError, ValueError):
    pass


class ConfigError(AQPNNError, ValueError):
    pass


class EmptyModel(AQPNNError, ValueError):
    pass


class OutOfRange(AQPNNError, ValueError):
    pass


class UnknownDataset(AQPNNError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown dataset"


class ParseError(AQPNNError, ValueError):
    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class TooManyClasses(AQPNNError, ValueError):
    pass
