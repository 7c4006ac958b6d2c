"""Shared exception types."""


class InvariantViolation(RuntimeError):
    """An internal construction step reached a state it promised was impossible.

    This is never swallowed: it marks a genuine gap between the implemented
    construction and the guarantees it relies on, and must surface to the
    caller (and ultimately to the verification records).
    """
