"""Exception hierarchy shared by every qind module."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from qind.rubric.validation import ValidationReport


class QindError(Exception):
    """Base class for all errors raised by qind."""


class InputError(QindError):
    """User supplied input (files, options, identifiers) is unusable."""


class ContractViolation(QindError, ValueError):
    """A caller broke the precondition of a pure scoring operation."""


class RubricNotFoundError(InputError):
    """Neither a built-in rubric id nor a readable rubric file."""


class RubricParseError(InputError):
    """A rubric document is not well-formed."""


class RubricValidationError(InputError):
    """A rubric document parsed but violates rubric invariants.

    Args:
        report: The validation report holding the error findings.
    """

    def __init__(self, report: ValidationReport):
        self.report = report
        details = "; ".join(f"{finding.path}: {finding.message}" for finding in report.errors)
        super().__init__(f"invalid rubric: {details}")


class CollectorError(QindError):
    """A local collector could not read its target."""


class NetworkUnavailable(QindError):
    """A remote resource could not be obtained (offline cache miss or transport failure)."""


class EvidenceConflict(QindError):
    """Two collectors reported the same fact id."""


class MalformedResponse(NetworkUnavailable):
    """A remote service answered with a body that cannot be decoded."""
