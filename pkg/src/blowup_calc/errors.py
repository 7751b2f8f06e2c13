"""Exception types shared across the calculators."""


class ValidationError(ValueError):
    """Input data violates a precondition or a numerical constraint."""


class ParityError(ValidationError):
    """Chern data whose Euler characteristics cannot all be integers."""


class StepError(ValidationError):
    """A step of an iterated transform was rejected."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason
