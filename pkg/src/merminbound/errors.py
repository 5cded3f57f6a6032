"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented invariant (named in the message)."""


class InternalConsistencyError(RuntimeError):
    """Two independently computed quantities disagree beyond tolerance.

    Raised instead of emitting silently wrong numbers; indicates a bug in
    one of the computation routes, not bad user input.
    """
