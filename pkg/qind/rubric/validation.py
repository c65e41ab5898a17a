"""Rubric invariant checks reported as findings rather than exceptions."""

from __future__ import annotations

from collections import Counter
from collections.abc import Collection
from typing import Literal

from qind.base import FrozenModel
from qind.rubric.model import Rubric

Severity = Literal["error", "warning"]


class Finding(FrozenModel):
    severity: Severity
    path: str
    message: str


class ValidationReport(FrozenModel):
    rubric_id: str
    findings: tuple[Finding, ...] = ()

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    @property
    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "warning"]

    @property
    def ok(self) -> bool:
        """True when no error-severity finding exists."""
        return not self.errors


def _levels_text(levels: Collection[int]) -> str:
    return ",".join(str(level) for level in sorted(levels))


def validate_rubric(rubric: Rubric, known_checks: Collection[str] | None = None) -> ValidationReport:
    """Check every rubric invariant.

    Args:
        rubric: The rubric to inspect.
        known_checks: Optional catalogue of check ids; unknown ids bound in the
            rubric are reported as warnings.

    Returns:
        A report with zero findings iff all invariants hold (and, when a
        catalogue is given, every bound check is known).
    """
    findings: list[Finding] = []

    def error(path: str, message: str) -> None:
        findings.append(Finding(severity="error", path=path, message=message))

    if not rubric.id.strip():
        error("id", "rubric id is empty")
    if rubric.max_level < 1:
        error("max_level", f"max_level must be at least 1, got {rubric.max_level}")
    if not rubric.dimensions:
        error("dimensions", "rubric has no dimensions")

    if rubric.scale:
        scale_levels = Counter(s.level for s in rubric.scale)
        expected = set(range(0, rubric.max_level + 1))
        if set(scale_levels) != expected or any(n > 1 for n in scale_levels.values()):
            error("scale", f"scale must name each level 0..{rubric.max_level} exactly once")

    expected_levels = set(range(1, rubric.max_level + 1))
    seen_dimensions: set[str] = set()
    seen_attributes: set[str] = set()

    for d_index, dimension in enumerate(rubric.dimensions):
        d_path = f"dimensions[{d_index}]"
        if not dimension.id.strip():
            error(f"{d_path}.id", "dimension id is empty")
        elif dimension.id in seen_dimensions:
            error(f"{d_path}.id", f"duplicate dimension id {dimension.id!r}")
        seen_dimensions.add(dimension.id)
        if not dimension.attributes:
            error(f"{d_path}.attributes", f"dimension {dimension.id!r} has no attributes")

        for a_index, attribute in enumerate(dimension.attributes):
            a_path = f"{d_path}.attributes[{a_index}]"
            if not attribute.id.strip():
                error(f"{a_path}.id", "attribute id is empty")
            elif attribute.id in seen_attributes:
                error(f"{a_path}.id", f"duplicate attribute id {attribute.id!r}")
            seen_attributes.add(attribute.id)

            if attribute.default_weight <= 0:
                error(f"{a_path}.default_weight", f"weight must be positive, got {attribute.default_weight}")

            levels = [statement.level for statement in attribute.levels]
            counts = Counter(levels)
            missing = expected_levels - set(levels)
            if missing:
                error(f"{a_path}.levels", f"missing levels {_levels_text(missing)}")
            if duplicated := [level for level, n in counts.items() if n > 1]:
                error(f"{a_path}.levels", f"duplicate levels {_levels_text(duplicated)}")
            if extra := set(levels) - expected_levels:
                error(f"{a_path}.levels", f"levels {_levels_text(extra)} outside 1..{rubric.max_level}")
            if not missing and not extra and levels != sorted(levels):
                error(f"{a_path}.levels", "levels are not in ascending order")
            for s_index, statement in enumerate(attribute.levels):
                if not statement.text.strip():
                    error(f"{a_path}.levels[{s_index}].text", f"level {statement.level} has empty text")

            bound = [binding.level for binding in attribute.checks]
            bound_counts = Counter(bound)
            if unbound := expected_levels - set(bound):
                error(f"{a_path}.checks", f"missing check bindings for levels {_levels_text(unbound)}")
            if twice := [level for level, n in bound_counts.items() if n > 1]:
                error(f"{a_path}.checks", f"levels {_levels_text(twice)} bound more than once")
            if stray := set(bound) - expected_levels:
                error(f"{a_path}.checks", f"bindings for levels {_levels_text(stray)} outside 1..{rubric.max_level}")
            for b_index, binding in enumerate(attribute.checks):
                b_path = f"{a_path}.checks[{b_index}].check"
                if not binding.check.strip():
                    error(b_path, f"level {binding.level} has an empty check id")
                elif known_checks is not None and not binding.is_manual and binding.check not in known_checks:
                    findings.append(
                        Finding(severity="warning", path=b_path, message=f"unknown check {binding.check!r}")
                    )

    return ValidationReport(rubric_id=rubric.id, findings=tuple(findings))
