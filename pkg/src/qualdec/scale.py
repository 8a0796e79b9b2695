"""Finite totally ordered qualitative scales.

A scale is a chain of levels identified with the integer ranks
0..size-1; rank order is the scale order, 0 is the bottom and
size-1 the top.  All value-side and uncertainty-side grades in this
package live on such a scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Scale:
    size: int

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 2:
            raise ValueError(f"a scale needs at least 2 levels, got {self.size!r}")

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def levels(self) -> range:
        return range(self.size)

    def check(self, level: int) -> int:
        """Validate that `level` is a rank of this scale and return it."""
        if not isinstance(level, int) or not 0 <= level < self.size:
            raise ValueError(f"level {level!r} outside scale 0..{self.size - 1}")
        return level

    def reverse(self, level: int) -> int:
        """Order-reversing involution: the rank complement top - level.

        This is the unique strictly antitone involution on a finite chain;
        it swaps top and bottom and is its own inverse.
        """
        return self.top - self.check(level)

    def median(self, levels: Iterable[int]) -> int:
        """Middle element of an odd-size multiset of levels.

        Multiplicity is respected: the input is sorted and the element at
        the central index returned.  Even-size and empty inputs are
        rejected rather than tie-broken.
        """
        ranked = sorted(self.check(v) for v in levels)
        if not ranked:
            raise ValueError("median of an empty multiset")
        if len(ranked) % 2 == 0:
            raise ValueError(f"median needs an odd count of levels, got {len(ranked)}")
        return ranked[len(ranked) // 2]
