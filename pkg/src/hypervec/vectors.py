"""Vectors with exact coordinates over Q or Q[i].

Text form: "(p/q, p/q, ...)". One coordinate minimum; dimension is fixed
per model and enforced where vectors meet model operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .scalars import (
    FieldTag,
    Scalar,
    format_scalar,
    imag_part,
    make_scalar,
    parse_scalar,
    real_part,
)


@dataclass(frozen=True)
class Vector:
    coords: tuple[Scalar, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("a vector needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _require_same_dim(self, other: "Vector"):
        if len(self.coords) != len(other.coords):
            raise ValueError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        self._require_same_dim(other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        self._require_same_dim(other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Vector(tuple(-c for c in self.coords))

    def scaled(self, a: Scalar) -> "Vector":
        return Vector(tuple(a * c for c in self.coords))

    def __str__(self):
        return "(" + ", ".join(format_scalar(c) for c in self.coords) + ")"


def make_vector(field: FieldTag, values: Iterable) -> Vector:
    return Vector(tuple(make_scalar(field, v) for v in values))


def zero_vector(field: FieldTag, dim: int) -> Vector:
    return make_vector(field, [0] * dim)


def unit_vector(field: FieldTag, dim: int, axis: int = 0) -> Vector:
    if not 0 <= axis < dim:
        raise ValueError(f"axis {axis} out of range for dim {dim}")
    return make_vector(field, [1 if i == axis else 0 for i in range(dim)])


def vector_key(v: Vector) -> tuple[tuple[Fraction, Fraction], ...]:
    """Deterministic total order on vectors of equal dimension."""
    return tuple((real_part(c), imag_part(c)) for c in v.coords)


def parse_vector(text: str, field: FieldTag) -> Vector:
    """Parse "(p/q, p/q, ...)" in the given field; whitespace-insensitive."""
    s = re.sub(r"\s+", "", text)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"vector must be parenthesized: {text!r}")
    body = s[1:-1]
    if not body:
        raise ValueError("empty vector")
    return Vector(tuple(parse_scalar(part, field) for part in body.split(",")))
