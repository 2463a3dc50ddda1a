"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: DomainError -> 2, ResourceError -> 3,
InvariantViolation -> 4.
"""


class FrobeniusError(Exception):
    pass


class DomainError(FrobeniusError, ValueError):
    """Input outside an operation's precondition."""


class NoInverseError(DomainError):
    pass


class NotInRegionError(DomainError):
    pass


class ResourceError(FrobeniusError):
    """Enumeration budget, memory cap or integer width exceeded."""


class InvariantViolation(FrobeniusError):
    """A case the derivation claims is unreachable was reached."""
