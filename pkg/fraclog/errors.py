"""Exception types shared across the toolkit."""

from typing import Any


class DomainError(ValueError):
    """Parameters violate the hypothesis of a formula or inequality.

    Attributes:
        hypothesis: Human-readable statement of the violated condition
        parameters: Offending parameter values, keyed by name
    """

    def __init__(self, hypothesis: str, **parameters: Any) -> None:
        self.hypothesis = hypothesis
        self.parameters = parameters
        if parameters:
            detail = ", ".join(f"{key}={value!r}" for key, value in parameters.items())
            super().__init__(f"{hypothesis} (got {detail})")
        else:
            super().__init__(hypothesis)


class ZeroFieldError(DomainError):
    """An operation that normalizes by a norm received the zero function."""

    def __init__(self, operation: str) -> None:
        super().__init__(f"{operation} requires a nonzero field")


class IntegrabilityError(DomainError):
    """A profile's tail makes a norm needed by an inequality diverge."""

    pass


class FieldFormatError(ValueError):
    """A serialized field container is malformed."""

    pass


class MarginViolationError(Exception):
    """One or more inequality checks came out below tolerance."""

    def __init__(self, failed: int, worst_relative_margin: float) -> None:
        self.failed = failed
        self.worst_relative_margin = worst_relative_margin
        super().__init__(
            f"{failed} check(s) violated tolerance; worst relative margin {worst_relative_margin:.3e}"
        )
