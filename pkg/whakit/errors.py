"""
Exception hierarchy shared by the library and the command line.

Verification failures inside ``check_*`` functions are data (report entries).
The exceptions below are raised only for bad input or for constructions that
must certify their own result.
"""

from typing import Any, Dict, Optional


class WhakitError(Exception):
    """Base class for all errors raised by whakit."""

    exit_code = 1

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used by the CLI error output."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "context": {k: str(v) for k, v in self.context.items()},
        }


class InputError(WhakitError):
    """A precondition or argument was violated."""

    exit_code = 2


class FormatError(InputError):
    """A structure-constant, module or element file could not be read."""


class FieldError(InputError):
    """Invalid field parameters, or a scalar the field cannot represent."""


class AmbientCapExceeded(InputError):
    """A tensor power would exceed the configured ambient dimension cap."""


class CriterionUnavailable(WhakitError):
    """The trace-form radical criterion needs characteristic zero."""

    exit_code = 2


class VerificationError(WhakitError):
    """A self-certifying construction found a failing identity."""

    def __init__(self, message: str, reports=None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context)
        self.reports = list(reports or [])

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["reports"] = [report.to_dict() for report in self.reports]
        return data


class DoubleConstructionError(VerificationError):
    """Neither multiplication reading of the double yields a weak Hopf algebra."""
