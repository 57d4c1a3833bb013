"""Exception types raised by lcsenum."""


class LCSError(Exception):
    """Base class for all lcsenum errors."""


class DomainError(LCSError, ValueError):
    """An argument is outside the domain of a formula or generator."""


class CapacityError(LCSError, MemoryError):
    """The DP table would exceed the configured cell cap."""


class BudgetExceeded(LCSError):
    """The naive backtrace visited more nodes than its budget allows.

    ``stats`` holds the partial :class:`~lcsenum.enumeration.NaiveRunStats`
    collected up to the point of abort.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


class OracleLimitError(LCSError):
    """An instance is too large for the exhaustive oracles."""
