"""Shared exception types."""

from __future__ import annotations


class GuardExceeded(Exception):
    """A bounded exhaustive computation refused to run past its guard.

    Callers treat this as "inconclusive", never as a decision.
    """


class CertificateError(Exception):
    """A certificate failed re-verification against its instance."""


class ParseError(Exception):
    """Malformed instance or certificate text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
