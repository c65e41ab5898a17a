"""Shared pydantic base model and the exact-rational field type."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def to_fraction(value: Any) -> Fraction:
    """Convert a JSON-ish number into an exact rational.

    Floats are read through their shortest decimal representation, so ``0.1``
    becomes ``1/10`` rather than the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("a boolean is not a number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"{value!r} is not a finite number")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{value!r} is not a rational number") from exc
    raise ValueError(f"{value!r} is not a number")


def fraction_to_json(value: Fraction) -> int | float | str:
    """Serialize a rational losslessly: int, exact float, or ``"p/q"``."""
    if value.denominator == 1:
        return value.numerator
    as_float = float(value)
    if Fraction(repr(as_float)) == value:
        return as_float
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[Fraction, BeforeValidator(to_fraction), PlainSerializer(fraction_to_json)]


class FrozenModel(BaseModel):
    """Immutable model that rejects unknown keys."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)
