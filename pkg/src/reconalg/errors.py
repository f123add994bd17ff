"""Exception hierarchy shared across the package."""


class ReconError(Exception):
    """Base class for all package errors."""


class DomainError(ReconError, ValueError):
    """Input outside the domain of an operation."""


class VerificationError(ReconError):
    """A self-check failed; signals an implementation bug or bad data."""


class BoundExhausted(ReconError):
    """A search bound was too small to certify the answer."""


class LiftSearchExhausted(BoundExhausted):
    """No certified deformed lift was found for an arrow."""
