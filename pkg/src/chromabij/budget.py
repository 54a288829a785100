"""Enumeration budgets.

Every brute-force routine takes an optional ``budget`` argument. When it is
omitted the default below is used, unless the ``CHROMABIJ_BUDGET``
environment variable is set, in which case that value applies to all
enumerations.
"""

import os

from .errors import BudgetExceededError

DEFAULT_SUBSET_BUDGET = 2**24
DEFAULT_COLORING_BUDGET = 10**7
ENV_VAR = "CHROMABIJ_BUDGET"


def resolve(budget, default=DEFAULT_SUBSET_BUDGET):
    if budget is not None:
        return int(budget)
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return default


def check(amount, budget, what):
    if amount > budget:
        raise BudgetExceededError(f"{what}: {amount} exceeds budget {budget}")


class Counter:
    """Running tally that raises once ``limit`` is passed."""

    __slots__ = ("count", "limit", "what")

    def __init__(self, limit, what):
        self.count = 0
        self.limit = limit
        self.what = what

    def tick(self, k=1):
        self.count += k
        if self.count > self.limit:
            raise BudgetExceededError(f"{self.what}: budget {self.limit} exceeded")
