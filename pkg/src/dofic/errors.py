"""Exception hierarchy shared by the engine and the CLI."""

from __future__ import annotations


class DoficError(Exception):
    """Base class for all engine errors."""


class NonPositiveAntennaCount(DoficError, ValueError):
    pass


class ConditionNotSatisfied(DoficError, ValueError):
    pass


class CornerUndefinedForCase(DoficError, ValueError):
    pass


class InfeasibleParameters(DoficError, ValueError):
    """A scheme parameter constraint failed; ``constraint`` names which one."""

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        msg = constraint if not detail else f"{constraint}: {detail}"
        super().__init__(msg)


class PartitionInfeasible(DoficError, ValueError):
    pass


class CausalityViolation(DoficError, RuntimeError):
    """A retransmitted combination needed a channel that is not yet known."""


class AchievabilityGap(DoficError, AssertionError):
    def __init__(self, message: str, corner=None):
        self.corner = corner
        super().__init__(message)
