"""Exception types shared across the package."""


class TuranLabError(Exception):
    """Base class for all package errors."""


class BudgetExceeded(TuranLabError):
    """An exact computation was asked for an input beyond its configured budget."""


class InvalidR(TuranLabError, ValueError):
    pass


class EmptySpec(TuranLabError, ValueError):
    pass


class ClassTooSmall(TuranLabError, ValueError):
    pass


class GadgetSearchFailed(TuranLabError):
    pass


class BadPartition(TuranLabError, ValueError):
    pass


class NotCriticalEdge(TuranLabError, ValueError):
    pass


class NotEdgeCritical(TuranLabError, ValueError):
    pass


class WrongChromatic(TuranLabError, ValueError):
    pass


class PatternEmpty(TuranLabError, ValueError):
    pass


class Graph6Error(TuranLabError, ValueError):
    pass


class CheckpointError(TuranLabError):
    pass
