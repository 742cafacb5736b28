from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class HomDim:
    """A homological dimension: a natural number, certified infinite, or exceeded(cap)."""

    kind: str  # "finite" | "infinite" | "exceeded"
    value: int = 0

    @classmethod
    def finite(cls, n: int) -> "HomDim":
        return cls("finite", n)

    @classmethod
    def infinite(cls) -> "HomDim":
        return cls("infinite")

    @classmethod
    def exceeded(cls, cap: int) -> "HomDim":
        return cls("exceeded", cap)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_exceeded(self) -> bool:
        return self.kind == "exceeded"

    def at_most(self, n: int) -> Optional[bool]:
        """None when the value is unknown (exceeded)."""
        if self.is_exceeded:
            return None
        return self.is_finite and self.value <= n

    def at_least(self, n: int) -> Optional[bool]:
        if self.is_exceeded:
            return None
        return self.is_infinite or self.value >= n

    def plus(self, k: int) -> "HomDim":
        return HomDim.finite(self.value + k) if self.is_finite else self

    def as_float(self) -> float:
        if self.is_exceeded:
            raise ValueError("exceeded dimension has no numeric value")
        return float("inf") if self.is_infinite else float(self.value)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.is_exceeded:
            return f"exceeded({self.value})"
        return str(self.value)


def max_dim(values: Iterable[HomDim]) -> HomDim:
    """Supremum; a certified infinity dominates an exceeded cap."""
    best = HomDim.finite(0)
    exceeded = None
    for d in values:
        if d.is_infinite:
            return d
        if d.is_exceeded:
            exceeded = d
        elif d.value > best.value:
            best = d
    return exceeded if exceeded is not None else best
