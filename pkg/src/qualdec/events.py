"""Events (subsets of the state space) encoded as bitmasks.

State `s` is in the event `e` iff bit `s` of `e` is set.  The mask value
doubles as the index into dense capacity tables, so masks are the one
subset representation used across the package.
"""

from __future__ import annotations

from typing import Iterable


def full_event(state_count: int) -> int:
    return (1 << state_count) - 1


def iter_events(state_count: int) -> range:
    """All subsets of range(state_count) as masks, in ascending mask order."""
    return range(1 << state_count)


def check_event(event: int, state_count: int) -> int:
    if not isinstance(event, int) or not 0 <= event <= full_event(state_count):
        raise ValueError(f"event mask {event!r} invalid for {state_count} states")
    return event


def event_members(event: int) -> tuple[int, ...]:
    """State indices contained in the event, ascending."""
    members = []
    state = 0
    while event:
        if event & 1:
            members.append(state)
        event >>= 1
        state += 1
    return tuple(members)


def event_of(states: Iterable[int], state_count: int) -> int:
    mask = 0
    for s in states:
        if not 0 <= s < state_count:
            raise ValueError(f"state index {s} outside 0..{state_count - 1}")
        mask |= 1 << s
    return mask


def complement(event: int, state_count: int) -> int:
    return full_event(state_count) ^ check_event(event, state_count)
