"""Custom exception classes."""

from typing import Any

from eudoxus.core.errors import ErrorKeys


class EudoxusError(Exception):
    """Base exception for Eudoxus."""

    def __init__(self, message: str, code: str = "error", details: dict[str, Any] | None = None):
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(message)


class ValidationError(EudoxusError):
    """Exception for invalid arguments."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.validation_error.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class ExprSyntaxError(EudoxusError):
    """Malformed expression text, located by byte offset."""

    def __init__(
        self,
        message: str,
        offset: int,
        expected: frozenset[str] = frozenset(),
        code: str = ErrorKeys.syntax_error.name,
    ):
        self.offset = offset
        self.expected = expected
        super().__init__(
            message,
            code,
            {"offset": offset, "expected": ", ".join(sorted(expected))},
        )


class DepthExceededError(EudoxusError):
    """Exception for expressions nested deeper than the configured limit."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.depth_exceeded.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class InconclusiveSignError(EudoxusError):
    """Raised when an operation needs a sign certificate that fuel could not produce."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.inconclusive_sign.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class FiniteExhaustedError(EudoxusError):
    """Exception for reading past the end of a finite continued fraction."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.finite_exhausted.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class SupportViolationError(EudoxusError):
    """Exception for denominators outside the declared prime support."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.support_violation.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class PrecisionExhaustedError(EudoxusError):
    """Exception for p-adic truncations too short for the requested level."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.precision_exhausted.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class PrimeMismatchError(EudoxusError):
    """Exception for mixing elements attached to different primes."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.prime_mismatch.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class IncoherentActionError(EudoxusError):
    """Exception for actions whose levels do not describe one p-adic number."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.incoherent_action.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class DefectViolationError(EudoxusError):
    """Exception for an observed defect reaching the claimed bound."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.defect_violation.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)


class TrichotomyViolationError(EudoxusError):
    """Exception for a node certified both positive and negative."""

    def __init__(
        self,
        message: str,
        code: str = ErrorKeys.trichotomy_violation.name,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, code, details)
