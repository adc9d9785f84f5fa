class HalinPackerError(Exception):
    pass


class InvalidGraph(HalinPackerError, ValueError):
    """Input does not describe a valid (cubic Halin or simple connected) graph."""


class NotATree(InvalidGraph):
    pass


class BadDegree(InvalidGraph):
    pass


class OrderTooSmall(InvalidGraph):
    pass


class CycleMismatch(InvalidGraph):
    pass


class NonPlanarOrder(InvalidGraph):
    pass


class Disconnected(InvalidGraph):
    pass


class NotOnCycle(HalinPackerError, ValueError):
    pass


class OracleTooLarge(HalinPackerError, ValueError):
    pass


class InvalidColoring(HalinPackerError, ValueError):
    pass


class PartialColoring(InvalidColoring):
    pass


class ClassOutOfRange(InvalidColoring):
    pass


class InvalidSchedule(HalinPackerError, ValueError):
    pass


class InvalidSize(HalinPackerError, ValueError):
    pass


class BoundTooLarge(HalinPackerError, ValueError):
    pass


class UnknownName(HalinPackerError, KeyError):
    pass


class BadTree(HalinPackerError, ValueError):
    pass


class FallbackExhausted(HalinPackerError, RuntimeError):
    """The exact solver could not produce a coloring the construction promised."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class SearchLimitReached(HalinPackerError, RuntimeError):
    pass
