"""Exception types shared across the library."""


class YoungGapError(Exception):
    """Base class for all library errors."""


class ValidationError(YoungGapError, ValueError):
    """A constructed object violates its invariants."""


class DomainError(YoungGapError, ValueError):
    """A point lies outside the interval it must belong to."""


class ConvergenceError(YoungGapError, RuntimeError):
    """Bisection did not reach its width target within the iteration budget.

    With the default budget of 200 iterations this only fires for a broken
    function object (non-strict increase, NaN values), never for a tight
    tolerance: 2**-200 underflows any double-width bracket.
    """


class UnsupportedOrigin(YoungGapError, ValueError):
    """Merkle comparison requested for a pair whose domains do not start at 0."""


class ParseError(YoungGapError, ValueError):
    """A function spec document could not be parsed."""


class ConsistencyError(YoungGapError, RuntimeError):
    """An internal cross-check between two evaluation routes failed."""


class BudgetExceeded(YoungGapError, RuntimeError):
    """Panel budget exhausted before the width target was met.

    Carries the best enclosure achieved so the caller can decide whether an
    inconclusive certificate is acceptable.
    """

    def __init__(self, message: str, best, panels: int):
        super().__init__(message)
        self.best = best
        self.panels = panels
