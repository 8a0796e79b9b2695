"""Monotone set functions (capacities) and their possibilistic specializations.

A capacity assigns a scale level to every event over a finite state space,
is monotone under set inclusion, and pins the empty event to the bottom
level and the full event to the top level.  Possibility and necessity
measures are the maxitive and minitive special cases, both generated from
a normalized per-state distribution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .events import check_event, complement, event_members, full_event, iter_events
from .scale import Scale

# Dense tables hold 2^|S| entries; beyond this the representation is the
# wrong tool and construction is refused outright.
MAX_STATES = 20


class CapacityError(ValueError):
    """Invalid capacity table.

    For monotonicity violations `witness` is the offending pair of event
    masks (subset, superset) with value(subset) > value(superset).
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Capacity:
    """A validated monotone set function; every instance is valid by construction."""

    state_count: int
    scale: Scale
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.state_count <= MAX_STATES:
            raise CapacityError(
                f"state count must be in 1..{MAX_STATES}, got {self.state_count}"
            )
        object.__setattr__(self, "table", tuple(self.table))
        size = 1 << self.state_count
        if len(self.table) != size:
            raise CapacityError(
                f"table must cover all {size} events, got {len(self.table)} entries"
            )
        for event, value in enumerate(self.table):
            try:
                self.scale.check(value)
            except ValueError as exc:
                raise CapacityError(f"event {event}: {exc}") from exc
        if self.table[0] != self.scale.bottom:
            raise CapacityError(
                f"empty event must map to bottom, got {self.table[0]}"
            )
        if self.table[size - 1] != self.scale.top:
            raise CapacityError(
                f"full event must map to top, got {self.table[size - 1]}"
            )
        # Monotonicity against one-element-removed subsets suffices: every
        # inclusion chain decomposes into such cover steps.
        for event in range(1, size):
            bits = event
            while bits:
                bit = bits & -bits
                sub = event ^ bit
                if self.table[sub] > self.table[event]:
                    raise CapacityError(
                        f"monotonicity violated: value({sub:#b}) = {self.table[sub]}"
                        f" > value({event:#b}) = {self.table[event]}",
                        witness=(sub, event),
                    )
                bits ^= bit

    def value(self, event: int) -> int:
        return self.table[check_event(event, self.state_count)]

    @property
    def full_mask(self) -> int:
        return full_event(self.state_count)


def validate_capacity(
    table: Sequence[int] | Mapping[int, int], state_count: int, scale: Scale
) -> Capacity:
    """Build a Capacity from a dense sequence or an event-mask -> level mapping.

    Missing or surplus entries, boundary violations, and monotonicity
    violations raise CapacityError (the latter with a witness pair).
    """
    if isinstance(table, Mapping):
        size = 1 << state_count
        missing = [e for e in range(size) if e not in table]
        if missing:
            raise CapacityError(f"missing entries for events {missing[:8]}")
        extra = [e for e in table if not 0 <= e < size]
        if extra:
            raise CapacityError(f"entries for out-of-range events {sorted(extra)[:8]}")
        dense = tuple(table[e] for e in range(size))
    else:
        dense = tuple(table)
    return Capacity(state_count, scale, dense)


@dataclass(frozen=True)
class PossibilityDistribution:
    """Per-state levels with at least one state at the top of the scale."""

    scale: Scale
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("distribution needs at least one state")
        for v in self.values:
            self.scale.check(v)
        if max(self.values) != self.scale.top:
            raise ValueError(
                f"distribution not normalized: max level {max(self.values)}"
                f" < top {self.scale.top}"
            )

    @property
    def state_count(self) -> int:
        return len(self.values)


def possibility_capacity(pi: PossibilityDistribution) -> Capacity:
    """Maxitive capacity: each event gets the best level among its states."""
    n = pi.state_count
    table = [0] * (1 << n)
    for event in iter_events(n):
        if event:
            table[event] = max(pi.values[s] for s in event_members(event))
    return Capacity(n, pi.scale, tuple(table))


def necessity_capacity(pi: PossibilityDistribution) -> Capacity:
    """Minitive dual: order-reverse of the possibility of the complement."""
    n = pi.state_count
    poss = possibility_capacity(pi)
    table = tuple(
        pi.scale.reverse(poss.table[complement(event, n)]) for event in iter_events(n)
    )
    return Capacity(n, pi.scale, table)


@dataclass(frozen=True)
class CapacityTraits:
    """Decomposability classification, with first violating event pairs."""

    maxitive: bool
    minitive: bool
    maxitive_witness: tuple[int, int] | None = None
    minitive_witness: tuple[int, int] | None = None


def classify_capacity(capacity: Capacity) -> CapacityTraits:
    """Exhaustively test union/max and intersection/min decomposability."""
    table = capacity.table
    max_witness = None
    min_witness = None
    for a in iter_events(capacity.state_count):
        for b in iter_events(capacity.state_count):
            if max_witness is None and table[a | b] != max(table[a], table[b]):
                max_witness = (a, b)
            if min_witness is None and table[a & b] != min(table[a], table[b]):
                min_witness = (a, b)
        if max_witness is not None and min_witness is not None:
            break
    return CapacityTraits(
        maxitive=max_witness is None,
        minitive=min_witness is None,
        maxitive_witness=max_witness,
        minitive_witness=min_witness,
    )


def random_monotone_capacity(state_count: int, scale: Scale, seed: int) -> Capacity:
    """Seeded random capacity, always valid.

    Events are visited by increasing cardinality (mask order within a
    cardinality); each gets a level drawn uniformly from the interval
    forced below by its already-assigned subsets, and the full event is
    pinned to the top.
    """
    rng = random.Random(seed)
    size = 1 << state_count
    table = [0] * size
    full = size - 1
    for event in sorted(range(1, size), key=lambda e: (e.bit_count(), e)):
        lower = 0
        bits = event
        while bits:
            bit = bits & -bits
            lower = max(lower, table[event ^ bit])
            bits ^= bit
        table[event] = scale.top if event == full else rng.randint(lower, scale.top)
    return Capacity(state_count, scale, tuple(table))
