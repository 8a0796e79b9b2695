"""Ordinal utility of acts: Sugeno integrals and possibilistic variants.

The Sugeno integral of an act f under a capacity v is

    max over levels k of min(k, v({s : mu(f(s)) >= k}))

and admits two equivalent rewritings: indexing the max over outcomes
instead of levels, and a single median of 2n+1 levels.  All three are
implemented independently so they can cross-check each other.

The one numeric (non-ordinal) computation in the package, expected
utility, also lives here; it exists only as a foil to demonstrate which
dominance properties averaging violates.
"""

from __future__ import annotations

from typing import Sequence

from .acts import Act, DecisionFrame, level_set
from .capacity import Capacity, PossibilityDistribution
from .events import complement

PROBABILITY_TOL = 1e-9


def _capacity(frame: DecisionFrame) -> Capacity:
    if frame.capacity is None:
        raise ValueError("frame has no capacity; attach one before evaluating")
    return frame.capacity


def sugeno_levelcut(frame: DecisionFrame, f: Act) -> int:
    """Sugeno integral in level-cut form: max_k min(k, v(level_set(f, k)))."""
    table = _capacity(frame).table
    f = frame.check_act(f)
    best = 0
    for k in frame.scale.levels():
        value = min(k, table[level_set(frame, f, k)])
        if value > best:
            best = value
    return best


def sugeno_outcome(frame: DecisionFrame, f: Act) -> int:
    """Sugeno integral indexed over outcomes: max_x min(mu(x), v(F_x)).

    F_x collects the states where f does at least as well as x.  Agrees
    with sugeno_levelcut on every act.
    """
    table = _capacity(frame).table
    f = frame.check_act(f)
    best = 0
    for x in range(frame.outcome_count):
        value = min(frame.mu[x], table[level_set(frame, f, frame.mu[x])])
        if value > best:
            best = value
    return best


def sugeno_median(frame: DecisionFrame, f: Act) -> int:
    """Sugeno integral as a median of 2n+1 levels.

    With the n+1 outcomes sorted by utility (ties kept in index order),
    the integral is the median of the n capacity values of the upper
    level sets F_{x_1}..F_{x_n} together with all n+1 utility levels,
    multiplicities respected.
    """
    table = _capacity(frame).table
    f = frame.check_act(f)
    ordered = sorted(range(frame.outcome_count), key=lambda x: (frame.mu[x], x))
    pool = [frame.mu[x] for x in range(frame.outcome_count)]
    for x in ordered[1:]:
        pool.append(table[level_set(frame, f, frame.mu[x])])
    return frame.scale.median(pool)


def binary_act_value(frame: DecisionFrame, x: int, event: int, y: int) -> int:
    """Closed form for a two-outcome act: max(mu(y), min(mu(x), v(event))).

    Stated for mu(x) >= mu(y); the other case is normalized by swapping
    the outcomes and complementing the event, which leaves the act
    unchanged.
    """
    table = _capacity(frame).table
    frame.check_outcome(x)
    frame.check_outcome(y)
    if frame.mu[x] < frame.mu[y]:
        x, y = y, x
        event = complement(event, frame.state_count)
    return max(frame.mu[y], min(frame.mu[x], table[event]))


def _check_distribution(frame: DecisionFrame, pi: PossibilityDistribution) -> None:
    if pi.state_count != frame.state_count:
        raise ValueError(
            f"distribution covers {pi.state_count} states, frame has"
            f" {frame.state_count}"
        )
    if pi.scale != frame.scale:
        raise ValueError("distribution and frame use different scales")


def optimistic_utility(frame: DecisionFrame, pi: PossibilityDistribution, f: Act) -> int:
    """max_s min(pi(s), mu(f(s))): an act is good if some plausible state is good.

    Equals the Sugeno integral under the possibility capacity of pi.
    """
    _check_distribution(frame, pi)
    f = frame.check_act(f)
    return max(min(pi.values[s], frame.mu[f[s]]) for s in range(frame.state_count))


def pessimistic_utility(frame: DecisionFrame, pi: PossibilityDistribution, f: Act) -> int:
    """min_s max(reverse(pi(s)), mu(f(s))): good only if all plausible states are.

    Equals the Sugeno integral under the necessity capacity of pi.
    """
    _check_distribution(frame, pi)
    f = frame.check_act(f)
    rev = frame.scale.reverse
    return min(max(rev(pi.values[s]), frame.mu[f[s]]) for s in range(frame.state_count))


def expected_utility(probabilities: Sequence[float], payoffs: Sequence[float]) -> float:
    """Probability-weighted average of numeric payoffs."""
    if len(probabilities) != len(payoffs):
        raise ValueError(
            f"{len(probabilities)} probabilities for {len(payoffs)} payoffs"
        )
    if any(p < 0 for p in probabilities):
        raise ValueError("probabilities must be non-negative")
    total = sum(probabilities)
    if abs(total - 1.0) > PROBABILITY_TOL:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    return sum(p * v for p, v in zip(probabilities, payoffs))
