"""Simple types, weights and root-system errors."""

import re
from dataclasses import dataclass
from typing import Sequence, Tuple


class RootSystemError(Exception):
    """Base exception for root system errors."""
    pass


class UnsupportedTypeError(RootSystemError):
    pass


class NonDominantWeightError(RootSystemError):
    pass


class WeightIndexError(RootSystemError):
    pass


SUPPORTED_E_RANKS = (6, 7, 8)
_TYPE_PATTERN = re.compile(r"^\s*([A-Za-z])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True)
class SimpleType:
    """A simply-laced simple type: D_n (n >= 4) or E_6, E_7, E_8."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family == 'D':
            if self.rank < 4:
                raise UnsupportedTypeError(f"D{self.rank} is not supported (need rank >= 4)")
        elif self.family == 'E':
            if self.rank not in SUPPORTED_E_RANKS:
                raise UnsupportedTypeError(f"E{self.rank} is not a finite exceptional type")
        else:
            raise UnsupportedTypeError(f"Family {self.family!r} is not supported")

    @classmethod
    def parse(cls, text: str) -> 'SimpleType':
        match = _TYPE_PATTERN.match(text or "")
        if not match:
            raise UnsupportedTypeError(f"Cannot parse simple type {text!r}")
        return cls(match.group(1).upper(), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, order=True)
class Weight:
    """Weight in fundamental-weight coordinates (λ_1, ..., λ_rank)."""

    coords: Tuple[int, ...]

    @classmethod
    def of(cls, coords: Sequence[int]) -> 'Weight':
        return cls(tuple(int(c) for c in coords))

    @classmethod
    def fundamental(cls, rank: int, i: int) -> 'Weight':
        if not 1 <= i <= rank:
            raise WeightIndexError(f"No fundamental weight λ{i} in rank {rank}")
        return cls(tuple(1 if j == i else 0 for j in range(1, rank + 1)))

    @classmethod
    def zero(cls, rank: int) -> 'Weight':
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: 'Weight') -> 'Weight':
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: 'Weight') -> 'Weight':
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def label(self) -> str:
        """Readable form such as '0', 'λ1', '2λ1' or 'λ2+λ5'."""
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            prefix = "" if c == 1 else ("-" if c == -1 else str(c))
            parts.append(f"{prefix}λ{i}")
        return "+".join(parts).replace("+-", "-") if parts else "0"
