"""Exact half-integer arithmetic.

Indices such as l, m and the summation variable k take values in
{..., -1, -1/2, 0, 1/2, 1, ...} and must never suffer floating rounding;
they are stored as twice their value in a plain int.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class HalfInt:
    """A number q represented exactly by the integer 2q."""

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int):
            raise TypeError("HalfInt stores twice the value as an int")

    @classmethod
    def from_value(cls, value) -> "HalfInt":
        """Build from an int, float or string like '3/2'."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            if "/" in value:
                num, den = value.split("/")
                num, den = int(num), int(den)
                if den == 1:
                    return cls(2 * num)
                if den == 2:
                    return cls(num)
                raise ValueError(f"not a half-integer: {value!r}")
            value = float(value)
        twice = 2 * value
        if twice != round(twice):
            raise ValueError(f"not a half-integer: {value!r}")
        return cls(int(round(twice)))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __float__(self) -> float:
        return self.twice / 2.0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def half(twice: int) -> HalfInt:
    """Shorthand constructor: half(3) == 3/2."""
    return HalfInt(twice)


def unit_range(lo: HalfInt, hi: HalfInt) -> list[HalfInt]:
    """Values lo, lo+1, ..., hi in unit steps (empty if hi < lo)."""
    return [HalfInt(t) for t in range(lo.twice, hi.twice + 1, 2)]
