"""Exception types raised across the package."""


class RectPermError(Exception):
    """Base class for all errors raised by rectperm."""


class NotADescent(RectPermError, ValueError):
    pass


class InvalidMove(RectPermError, ValueError):
    pass


class SizeGuardExceeded(RectPermError):
    """A brute-force routine was asked for an instance above its size guard."""

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"{what}: n={n} exceeds guard n<={limit}")
        self.n = n
        self.limit = limit


class SizeMismatch(RectPermError, ValueError):
    pass


class NotATiling(RectPermError, ValueError):
    pass


class NotGeneric(RectPermError, ValueError):
    pass


class IllegalSlide(RectPermError, ValueError):
    pass


class InternalInvariantViolation(RectPermError, AssertionError):
    """Raised when a construction that should always succeed gets stuck."""


class InvalidGenRect(RectPermError, ValueError):
    """A generic-rectangulation document violates a named invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        msg = f"invalid-genrect: {invariant}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.invariant = invariant


class CyclicConstraints(RectPermError):
    pass


class MemoryBudgetExceeded(RectPermError):
    def __init__(self, level: int, states: int, cap: int):
        super().__init__(
            f"distinct-string cap {cap} exceeded at level {level} ({states} strings)"
        )
        self.level = level
        self.states = states
        self.cap = cap


class NotTwoClumped(RectPermError, ValueError):
    pass


class UnsupportedDegree(RectPermError, ValueError):
    pass
