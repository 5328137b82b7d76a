"""Exception hierarchy shared by every gbentlab module.

All errors derive from ValueError so callers that only know the plain
"bad input" contract keep working. The CLI maps each class onto an exit code:

- ParseError / ConfigError       -> 2
- InvariantViolation (+ subs)    -> 3
- BudgetExceeded                 -> 4
- PathDisagreement               -> 5 (bug alarm, never a data outcome)
"""


class GbentLabError(ValueError):
    """Root of the gbentlab error tree."""

    exit_code = 1


class ParseError(GbentLabError):
    """Malformed function file, JSON payload or CLI literal."""

    exit_code = 2


class ConfigError(ParseError):
    """Invalid value in config/*.yaml, .env or a CLI override."""


class InvariantViolation(GbentLabError):
    """A documented invariant does not hold for the given input."""

    exit_code = 3


class HypothesisError(InvariantViolation):
    """A theorem verifier was called outside the theorem's hypotheses."""


class NotGbent(InvariantViolation):
    """Dual requested for a function that is not gbent."""


class NotRegular(InvariantViolation):
    """Gbent function without a regular spectrum (n odd, k = 2)."""


class SignUndefined(InvariantViolation):
    """H_h(u) = 0 where a sign relation H' = +-H_h was requested."""


class BudgetExceeded(GbentLabError):
    """Requested enumeration or fan-out exceeds the configured budget."""

    exit_code = 4


class PathDisagreement(GbentLabError):
    """Two independent computations disagree, or an exact division was not exact."""

    exit_code = 5
