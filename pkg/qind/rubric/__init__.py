"""Rubric model, built-in POCME/FAIR-ST rubrics and the rubric file format."""

from qind.rubric.builtin import BUILTIN_RUBRIC_IDS, builtin_rubric
from qind.rubric.loader import load_rubric, parse_rubric, resolve_rubric, serialize_rubric
from qind.rubric.model import MANUAL, Attribute, CheckBinding, Dimension, LevelStatement, Rubric, ScaleLevel
from qind.rubric.validation import Finding, ValidationReport, validate_rubric

__all__ = [
    "BUILTIN_RUBRIC_IDS",
    "MANUAL",
    "Attribute",
    "CheckBinding",
    "Dimension",
    "Finding",
    "LevelStatement",
    "Rubric",
    "ScaleLevel",
    "ValidationReport",
    "builtin_rubric",
    "load_rubric",
    "parse_rubric",
    "resolve_rubric",
    "serialize_rubric",
    "validate_rubric",
]
