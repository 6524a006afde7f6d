"""Exception types raised by lrtables."""


class LrTablesError(ValueError):
    """Base class for all input and precondition errors."""


class LengthOverflow(LrTablesError):
    pass


class NotDecreasing(LrTablesError):
    pass


class DimensionMismatch(LrTablesError):
    pass


class NotSymmetric(LrTablesError):
    pass


class PreconditionViolated(LrTablesError):
    pass


class ParseError(LrTablesError):
    pass


class OutsideStableRange(LrTablesError):
    """The table formula is only valid for n at or above ``threshold``."""

    def __init__(self, message: str, threshold: int, n: int):
        super().__init__(message)
        self.threshold = threshold
        self.n = n
