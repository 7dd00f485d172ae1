"""Shared exception types."""


class FuchsError(Exception):
    """Base class for all package-specific errors."""


class SizeLimitError(FuchsError):
    """An operation would enumerate past the configured size guardrail."""


class RingMismatchError(FuchsError):
    """Operands belong to different rings."""


class InvalidPresentationError(FuchsError):
    """A ring presentation fails axiom or consistency validation."""


class InvalidCharacteristicError(FuchsError):
    """Characteristic out of range for the requested constructor."""


class SpecMismatchError(FuchsError):
    """Ordered-group operands belong to different group specs."""


class NoWitnessError(FuchsError):
    """Witness requested for a group/characteristic pair that is not realizable."""

    def __init__(self, message: str, reason: str = ""):
        super().__init__(message)
        self.reason = reason
