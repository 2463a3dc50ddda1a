import os

from .errors import DomainError

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "FROB_BUDGET"

# Largest accepted generator; keeps every intermediate product within 128 bits.
MAX_GENERATOR = 2**31


def get_budget(budget=None):
    """Resolve the enumeration budget: explicit argument, then $FROB_BUDGET, then the default."""
    if budget is not None:
        return int(budget)
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise DomainError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if value <= 0:
            raise DomainError(f"{BUDGET_ENV} must be positive, got {value}")
        return value
    return DEFAULT_BUDGET
