"""Error taxonomy shared by the whole package.

Three failure kinds, mapped to CLI exit codes: mathematically invalid
input (DomainError) and malformed invocations (UsageError) both exit 2,
refusals of over-budget computations (ResourceError) exit 3.
"""


class DomainError(ValueError):
    """The input is outside the mathematical domain of the operation."""


class UsageError(ValueError):
    """The call itself is malformed: bad syntax, mixed contexts, bad flags."""


class ResourceError(RuntimeError):
    """The input is valid but exceeds a guard; refused, never attempted."""
