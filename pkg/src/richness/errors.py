"""Exception types raised across the package."""

from __future__ import annotations


class RichnessError(Exception):
    """Base class for all errors raised by this package."""


class EmptySampleError(RichnessError, ValueError):
    """An abundance sample must contain at least one category."""


class NonPositiveCountError(RichnessError, ValueError):
    def __init__(self, label: str, count: object):
        self.label = label
        self.count = count
        super().__init__(f"count for {label!r} must be a positive integer, got {count!r}")


class DuplicateLabelError(RichnessError, ValueError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"duplicate category label {label!r}")


class InvalidInputError(RichnessError, ValueError):
    """An argument is outside an operation's documented domain."""


class NoFiniteSolutionError(RichnessError, ValueError):
    """The log-series relation has no finite root (observed C >= N)."""


class InvalidOrderError(RichnessError, ValueError):
    """Jackknife order must satisfy 1 <= k < n."""


class BudgetExceededError(RichnessError, RuntimeError):
    """Subset enumeration would exceed the configured budget.

    Callers hitting this should switch to the closed-form evaluation,
    which is exact at any scale.
    """

    def __init__(self, combinations: int, budget: int):
        self.combinations = combinations
        self.budget = budget
        super().__init__(
            f"enumeration of {combinations} subsets exceeds budget {budget}; "
            "use the closed form instead"
        )


class InvalidProbabilityError(RichnessError, ValueError):
    """Probabilities and risk levels must lie strictly inside (0, 1)."""


class ParseError(RichnessError, ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class SampleTooLargeError(RichnessError, ValueError):
    """Requested sample size exceeds the field population size."""


class InfeasibleModelError(RichnessError, RuntimeError):
    """A field model's constraints could not be met within the redraw budget."""
