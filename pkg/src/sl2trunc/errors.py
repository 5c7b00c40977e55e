"""Exception hierarchy shared by every module."""


class Sl2TruncError(Exception):
    """Base class; the CLI maps any subclass to a nonzero exit."""

    reason = "error"


class ValidationError(Sl2TruncError, ValueError):
    reason = "invalid-input"


class DomainError(Sl2TruncError, ValueError):
    reason = "domain"


class InfeasibleCharacteristicError(DomainError):
    reason = "infeasible-characteristic"


class UnsupportedCaseError(Sl2TruncError):
    reason = "unsupported"


class PreconditionError(Sl2TruncError, ValueError):
    reason = "precondition"


class ResourceError(Sl2TruncError, RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""

    reason = "resource"

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap
