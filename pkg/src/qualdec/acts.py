"""Decision frames and acts.

An act maps each state to an outcome and is stored as a plain tuple of
outcome indices, one per state.  The frame supplies everything needed to
interpret it: the scale, the per-outcome utility levels, and (optionally)
a capacity over the states.
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass
from typing import Sequence

from .capacity import Capacity
from .events import check_event

Act = tuple[int, ...]


@dataclass(frozen=True)
class DecisionFrame:
    """Evaluation context: states, outcomes, utility levels, optional capacity.

    By default the utility image must contain both the bottom and the top
    of the scale (a totally bad and an ideal outcome); pass
    ``require_extremes=False`` only for diagnostic frames that deliberately
    lack them.
    """

    state_count: int
    outcome_count: int
    scale: Scale
    mu: tuple[int, ...]
    capacity: Capacity | None = None
    require_extremes: InitVar[bool] = True

    def __post_init__(self, require_extremes: bool) -> None:
        if self.state_count < 1:
            raise ValueError(f"need at least one state, got {self.state_count}")
        if self.outcome_count < 1:
            raise ValueError(f"need at least one outcome, got {self.outcome_count}")
        object.__setattr__(self, "mu", tuple(self.mu))
        if len(self.mu) != self.outcome_count:
            raise ValueError(
                f"utility table has {len(self.mu)} entries for"
                f" {self.outcome_count} outcomes"
            )
        for level in self.mu:
            self.scale.check(level)
        if require_extremes:
            image = set(self.mu)
            if self.scale.bottom not in image or self.scale.top not in image:
                raise ValueError(
                    "utility image must contain both the bottom and the top level;"
                    " add a worst and a best outcome (see ensure_extremes)"
                )
        if self.capacity is not None:
            if self.capacity.state_count != self.state_count:
                raise ValueError(
                    f"capacity is over {self.capacity.state_count} states,"
                    f" frame has {self.state_count}"
                )
            if self.capacity.scale != self.scale:
                raise ValueError("capacity and frame use different scales")

    def check_outcome(self, outcome: int) -> int:
        if not isinstance(outcome, int) or not 0 <= outcome < self.outcome_count:
            raise ValueError(
                f"outcome index {outcome!r} outside 0..{self.outcome_count - 1}"
            )
        return outcome

    def check_act(self, act: Sequence[int]) -> Act:
        act = tuple(act)
        if len(act) != self.state_count:
            raise ValueError(
                f"act has {len(act)} entries for {self.state_count} states"
            )
        for outcome in act:
            self.check_outcome(outcome)
        return act

    def with_capacity(self, capacity: Capacity) -> "DecisionFrame":
        return DecisionFrame(
            self.state_count,
            self.outcome_count,
            self.scale,
            self.mu,
            capacity,
            require_extremes=False,
        )


def ensure_extremes(frame: DecisionFrame) -> DecisionFrame:
    """Return a frame whose utility image contains bottom and top.

    Missing extreme outcomes are appended after the existing ones (worst
    first), so original outcome indices are preserved.
    """
    mu = list(frame.mu)
    if frame.scale.bottom not in mu:
        mu.append(frame.scale.bottom)
    if frame.scale.top not in mu:
        mu.append(frame.scale.top)
    if len(mu) == frame.outcome_count:
        return frame
    return DecisionFrame(frame.state_count, len(mu), frame.scale, tuple(mu), frame.capacity)


def act_space(frame: DecisionFrame) -> tuple[Act, ...]:
    """Every act, in lexicographic order over outcome sequences.

    This order is the canonical enumeration order for exhaustive sweeps
    and witness reporting; the position of an act in it is its act index.
    """
    return tuple(
        itertools.product(range(frame.outcome_count), repeat=frame.state_count)
    )


def act_index(frame: DecisionFrame, act: Act) -> int:
    """Position of `act` in act_space(frame) (base-|X| digits, state 0 first)."""
    index = 0
    for outcome in act:
        index = index * frame.outcome_count + outcome
    return index


def constant_act(frame: DecisionFrame, outcome: int) -> Act:
    frame.check_outcome(outcome)
    return (outcome,) * frame.state_count


def compound_act(frame: DecisionFrame, f: Act, event: int, g: Act) -> Act:
    """Act equal to f on the event and to g off it."""
    f = frame.check_act(f)
    g = frame.check_act(g)
    check_event(event, frame.state_count)
    return tuple(
        f[s] if event >> s & 1 else g[s] for s in range(frame.state_count)
    )


def binary_act(frame: DecisionFrame, x: int, event: int, y: int) -> Act:
    """Act yielding outcome x on the event and y off it (x on all of S if event = S)."""
    frame.check_outcome(x)
    frame.check_outcome(y)
    check_event(event, frame.state_count)
    return tuple(
        x if event >> s & 1 else y for s in range(frame.state_count)
    )


def combine_by(outcome_order: Sequence[int], f: Act, g: Act, mode: str) -> Act:
    """Statewise worst/best of two acts under an explicit outcome preorder.

    `outcome_order` maps outcome index -> rank.  Ties in rank are resolved
    to the smaller outcome index, which makes the operation commutative.
    """
    if mode not in ("worst", "best"):
        raise ValueError(f"mode must be 'worst' or 'best', got {mode!r}")
    picked = []
    for a, b in zip(f, g):
        ra, rb = outcome_order[a], outcome_order[b]
        if ra == rb:
            picked.append(min(a, b))
        elif (ra < rb) == (mode == "worst"):
            picked.append(a)
        else:
            picked.append(b)
    return tuple(picked)


def pointwise_combine(frame: DecisionFrame, f: Act, g: Act, mode: str) -> Act:
    """Statewise worst/best by utility level (the outcome preorder from mu)."""
    return combine_by(frame.mu, frame.check_act(f), frame.check_act(g), mode)


def pointwise_leq_by(outcome_order: Sequence[int], f: Act, g: Act) -> bool:
    return all(outcome_order[a] <= outcome_order[b] for a, b in zip(f, g))


def pointwise_leq(frame: DecisionFrame, f: Act, g: Act) -> bool:
    """True iff g is at least as good as f in every state (a partial preorder)."""
    return pointwise_leq_by(frame.mu, frame.check_act(f), frame.check_act(g))


def comonotonic_by(outcome_order: Sequence[int], f: Act, g: Act) -> bool:
    for s in range(len(f)):
        for t in range(len(f)):
            if (
                outcome_order[f[s]] > outcome_order[f[t]]
                and outcome_order[g[s]] < outcome_order[g[t]]
            ):
                return False
    return True


def is_comonotonic(frame: DecisionFrame, f: Act, g: Act) -> bool:
    """True iff no state pair orders the two acts' outcomes oppositely."""
    return comonotonic_by(frame.mu, frame.check_act(f), frame.check_act(g))


def level_set(frame: DecisionFrame, f: Act, level: int) -> int:
    """Event mask of states where the act clears the given utility level."""
    frame.scale.check(level)
    mask = 0
    for s, outcome in enumerate(f):
        if frame.mu[outcome] >= level:
            mask |= 1 << s
    return mask


def compound_index_tables(frame: DecisionFrame, acts: Sequence[Act]):
    """Per-event act-index contributions of on-event and off-event parts.

    For the full lexicographic act space, the act equal to f on an event
    and to h off it sits at index on[event][i_f] + off[event][i_h]; this
    turns compound-act quantifiers into integer arithmetic.
    """
    n = frame.state_count
    weights = [frame.outcome_count ** (n - 1 - s) for s in range(n)]
    on = []
    off = []
    for event in range(1 << n):
        on_event = []
        off_event = []
        for act in acts:
            proj_on = sum(act[s] * weights[s] for s in range(n) if event >> s & 1)
            off_event.append(sum(act[s] * weights[s] for s in range(n)) - proj_on)
            on_event.append(proj_on)
        on.append(on_event)
        off.append(off_event)
    return on, off
