"""Constructive synthesis of (scale, utility, capacity) representations.

Given a preference relation that passes the required dominance axioms,
the quotient of the act set by indifference is itself a finite chain;
reading the utility of outcomes off constant acts and the capacity of
events off two-outcome bets yields a Sugeno-integral representation of
the relation.  Synthesis always re-verifies the result: the construction
is backed by a representation theorem, so a verification failure is a
bug and is raised loudly instead of being repaired.

The module also hosts the counterexample generators: the exhaustive
search for sure-thing-principle violations and the numeric demonstration
that expected utility breaks conjunctive/disjunctive dominance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .acts import (
    Act,
    DecisionFrame,
    act_space,
    binary_act,
    compound_index_tables,
    constant_act,
)
from .capacity import (
    Capacity,
    CapacityError,
    PossibilityDistribution,
    classify_capacity,
    necessity_capacity,
    possibility_capacity,
)
from .events import full_event, iter_events
from .evaluate import (
    expected_utility,
    optimistic_utility,
    pessimistic_utility,
    sugeno_levelcut,
)
from .preference import (
    Axiom,
    AxiomVerdict,
    BudgetExceededError,
    PreferenceRelation,
    check_axiom,
    quantifier_budget,
)
from .scale import Scale

GENERAL_PRECONDITIONS = (Axiom.SAV1, Axiom.WS3, Axiom.SAV5, Axiom.RCD, Axiom.RDD)
OPTIMISTIC_PRECONDITIONS = (Axiom.SAV1, Axiom.WS3, Axiom.SAV5, Axiom.RCD, Axiom.DD)
PESSIMISTIC_PRECONDITIONS = (Axiom.SAV1, Axiom.WS3, Axiom.SAV5, Axiom.RDD, Axiom.CD)


class AxiomRefusalError(Exception):
    """Synthesis refused: a precondition axiom fails (verdict carries the witness)."""

    def __init__(self, verdict: AxiomVerdict):
        super().__init__(f"precondition {verdict.axiom.label} fails: {verdict.witness}")
        self.verdict = verdict


class RepresentationError(Exception):
    """A theorem-guaranteed verification failed; this is a bug, not an input error."""


@dataclass(frozen=True)
class Representation:
    """A Sugeno-integral model of a relation on its quotient scale.

    `scale` has one level per indifference class of the source relation;
    `mu` and `capacity` live on that scale; `provenance` gives, for each
    level, the first act (in enumeration order) of the class it came from.
    """

    scale: Scale
    mu: tuple[int, ...]
    capacity: Capacity
    provenance: tuple[Act, ...]


@dataclass(frozen=True)
class PossibilisticRepresentation:
    """A possibilistic model: per-state distribution on the quotient scale.

    In pessimistic mode `unreversed_form_agrees` records whether the
    min-max form computed with the raw distribution (no order reversal)
    happens to reproduce the relation as well; it is a diagnostic only.
    """

    scale: Scale
    mu: tuple[int, ...]
    distribution: tuple[int, ...]
    mode: str
    unreversed_form_agrees: bool | None = None


def induce_preorder(frame: DecisionFrame, budget: int | None = None) -> PreferenceRelation:
    """Rank the full act space by Sugeno-integral utility."""
    if frame.capacity is None:
        raise ValueError("frame has no capacity to induce a preorder from")
    size = frame.outcome_count ** frame.state_count
    limit = quantifier_budget(budget)
    if size > limit:
        raise BudgetExceededError("act space enumeration", size, limit)
    acts = act_space(frame)
    values = [sugeno_levelcut(frame, act) for act in acts]
    return PreferenceRelation.from_utilities(frame, acts, values)


def _dense_ranks(rel: PreferenceRelation) -> tuple[list[int], int]:
    distinct = sorted(set(rel.ranks))
    position = {rank: i for i, rank in enumerate(distinct)}
    return [position[r] for r in rel.ranks], len(distinct)


def synthesize_representation(
    rel: PreferenceRelation, budget: int | None = None
) -> Representation:
    """Extract a Sugeno representation from an admissible relation.

    Preconditions (checked first, refusal carries the failing verdict):
    complete preorder, weak compatibility with constant acts,
    non-triviality, and both restricted dominance axioms.  The
    construction: levels are the indifference classes; outcome utilities
    come from constant acts; the capacity of an event is the class of the
    best-on-event/worst-off-event bet.  The result is verified against
    the full relation before being returned.
    """
    for axiom in GENERAL_PRECONDITIONS:
        verdict = check_axiom(rel, axiom, budget)
        if not verdict.holds:
            raise AxiomRefusalError(verdict)
    frame = rel.frame
    dense, class_count = _dense_ranks(rel)
    index_of = {act: i for i, act in enumerate(rel.acts)}
    scale = Scale(class_count)

    mu = tuple(
        dense[index_of[constant_act(frame, x)]] for x in range(frame.outcome_count)
    )
    if min(mu) != scale.bottom or max(mu) != scale.top:
        raise RepresentationError(
            "extreme act classes are not attained by constant acts although"
            " pointwise dominance holds"
        )
    best = mu.index(scale.top)
    worst = mu.index(scale.bottom)

    try:
        sigma = Capacity(
            frame.state_count,
            scale,
            tuple(
                dense[index_of[binary_act(frame, best, event, worst)]]
                for event in iter_events(frame.state_count)
            ),
        )
    except CapacityError as exc:
        raise RepresentationError(
            f"bet classes do not form a capacity: {exc}"
        ) from exc

    # Bets on a single outcome against the worst one must evaluate to the
    # minimum of the outcome's utility and the event's capacity.
    for x in range(frame.outcome_count):
        for event in iter_events(frame.state_count):
            got = dense[index_of[binary_act(frame, x, event, worst)]]
            if got != min(mu[x], sigma.table[event]):
                raise RepresentationError(
                    f"bet on outcome {x} over event {event} has class {got},"
                    f" expected min(utility, capacity) ="
                    f" {min(mu[x], sigma.table[event])}"
                )

    provenance = [None] * class_count
    for i, act in enumerate(rel.acts):
        if provenance[dense[i]] is None:
            provenance[dense[i]] = act
    rep = Representation(scale, mu, sigma, tuple(provenance))

    mismatch = find_representation_mismatch(rel, rep)
    if mismatch is not None:
        raise RepresentationError(
            f"synthesized representation misorders acts {mismatch[0]} and"
            f" {mismatch[1]}"
        )
    return rep


def _representation_values(rel: PreferenceRelation, rep: Representation) -> list[int]:
    shadow = DecisionFrame(
        rel.frame.state_count,
        rel.frame.outcome_count,
        rep.scale,
        rep.mu,
        rep.capacity,
        require_extremes=False,
    )
    return [sugeno_levelcut(shadow, act) for act in rel.acts]


def _order_mismatch(
    acts: tuple[Act, ...], ranks: tuple[int, ...], values: list[int]
) -> tuple[Act, Act] | None:
    for i in range(len(acts)):
        for j in range(len(acts)):
            if (values[i] <= values[j]) != (ranks[i] <= ranks[j]):
                return acts[i], acts[j]
    return None


def find_representation_mismatch(
    rel: PreferenceRelation, rep: Representation
) -> tuple[Act, Act] | None:
    """First act pair on which the representation disagrees with the relation."""
    return _order_mismatch(rel.acts, rel.ranks, _representation_values(rel, rep))


def verify_representation(rel: PreferenceRelation, rep: Representation) -> bool:
    """True iff Sugeno utilities under the representation order acts as the relation does."""
    return find_representation_mismatch(rel, rep) is None


def synthesize_possibilistic(
    rel: PreferenceRelation, mode: str, budget: int | None = None
) -> PossibilisticRepresentation:
    """Extract a possibilistic (optimistic or pessimistic) model.

    Optimistic mode additionally requires disjunctive dominance, under
    which the synthesized capacity is maxitive and the distribution reads
    off singleton events; pessimistic mode dually requires conjunctive
    dominance, a minitive capacity, and reads the distribution off
    complements of singletons through the order reversal.
    """
    if mode == "optimistic":
        preconditions = OPTIMISTIC_PRECONDITIONS
    elif mode == "pessimistic":
        preconditions = PESSIMISTIC_PRECONDITIONS
    else:
        raise ValueError(f"mode must be 'optimistic' or 'pessimistic', got {mode!r}")
    for axiom in preconditions:
        verdict = check_axiom(rel, axiom, budget)
        if not verdict.holds:
            raise AxiomRefusalError(verdict)

    rep = synthesize_representation(rel, budget)
    traits = classify_capacity(rep.capacity)
    frame = rel.frame
    n = frame.state_count
    shadow = DecisionFrame(
        n, frame.outcome_count, rep.scale, rep.mu, None, require_extremes=False
    )

    if mode == "optimistic":
        if not traits.maxitive:
            raise RepresentationError(
                "disjunctive dominance holds but the synthesized capacity is"
                f" not maxitive (witness {traits.maxitive_witness})"
            )
        values = tuple(rep.capacity.table[1 << s] for s in range(n))
        distribution = PossibilityDistribution(rep.scale, values)
        if possibility_capacity(distribution) != rep.capacity:
            raise RepresentationError(
                "singleton distribution does not regenerate the capacity"
            )
        utilities = [optimistic_utility(shadow, distribution, a) for a in rel.acts]
        if _order_mismatch(rel.acts, rel.ranks, utilities) is not None:
            raise RepresentationError("optimistic utility does not represent the relation")
        return PossibilisticRepresentation(rep.scale, rep.mu, values, mode)

    if not traits.minitive:
        raise RepresentationError(
            "conjunctive dominance holds but the synthesized capacity is"
            f" not minitive (witness {traits.minitive_witness})"
        )
    full = full_event(n)
    values = tuple(
        rep.scale.reverse(rep.capacity.table[full ^ (1 << s)]) for s in range(n)
    )
    distribution = PossibilityDistribution(rep.scale, values)
    if necessity_capacity(distribution) != rep.capacity:
        raise RepresentationError(
            "complement distribution does not regenerate the capacity"
        )
    utilities = [pessimistic_utility(shadow, distribution, a) for a in rel.acts]
    if _order_mismatch(rel.acts, rel.ranks, utilities) is not None:
        raise RepresentationError("pessimistic utility does not represent the relation")
    # Diagnostic: the same min-max form fed the raw (unreversed) distribution.
    unreversed = [
        min(max(values[s], rep.mu[a[s]]) for s in range(n)) for a in rel.acts
    ]
    agrees = _order_mismatch(rel.acts, rel.ranks, unreversed) is None
    return PossibilisticRepresentation(rep.scale, rep.mu, values, mode, agrees)


def find_sure_thing_violation(
    frame: DecisionFrame, budget: int | None = None
) -> dict | None:
    """First preference reversal against the sure-thing principle, or None.

    Searches all (f, g, h, h', event) for a pair of compounds with
    f-then-h strictly worse than g-then-h but f-then-h' strictly better
    than g-then-h', under the frame's Sugeno utility.  Enumeration is
    lexicographic in act indices, then events, so the witness is
    reproducible.
    """
    if frame.capacity is None:
        raise ValueError("frame has no capacity")
    acts = act_space(frame)
    n_acts = len(acts)
    space = n_acts ** 4
    limit = quantifier_budget(budget)
    if space > limit:
        raise BudgetExceededError("sure-thing search", space, limit)
    utilities = [sugeno_levelcut(frame, act) for act in acts]
    on, off = compound_index_tables(frame, acts)
    events = range(1 << frame.state_count)
    for fi in range(n_acts):
        for gi in range(n_acts):
            reversal = False
            for event in events:
                onf, ong, offs = on[event][fi], on[event][gi], off[event]
                below = above = False
                for hi in range(n_acts):
                    uf = utilities[onf + offs[hi]]
                    ug = utilities[ong + offs[hi]]
                    if uf < ug:
                        below = True
                    elif uf > ug:
                        above = True
                    if below and above:
                        reversal = True
                        break
                if reversal:
                    break
            if not reversal:
                continue
            for hi in range(n_acts):
                for hpi in range(n_acts):
                    for event in events:
                        onf, ong, offs = on[event][fi], on[event][gi], off[event]
                        if (
                            utilities[onf + offs[hi]] < utilities[ong + offs[hi]]
                            and utilities[onf + offs[hpi]] > utilities[ong + offs[hpi]]
                        ):
                            return {
                                "f": acts[fi],
                                "g": acts[gi],
                                "h": acts[hi],
                                "h_prime": acts[hpi],
                                "event": event,
                                "utilities": (
                                    utilities[onf + offs[hi]],
                                    utilities[ong + offs[hi]],
                                    utilities[onf + offs[hpi]],
                                    utilities[ong + offs[hpi]],
                                ),
                            }
    return None


def sure_thing_demo_frame() -> DecisionFrame:
    """A four-state, two-outcome frame whose utility reverses under compounds.

    The capacity rates {s0,s2} below {s1,s2} but {s0,s3} above {s1,s3},
    so betting on s0 versus s1 flips depending on which extra state is
    favourable: a built-in sure-thing violation.
    """
    scale = Scale(3)
    table = [0] * 16
    table[0b0110] = 1  # {s1, s2}
    table[0b1001] = 1  # {s0, s3}
    for event in (0b0111, 0b1011, 0b1101, 0b1110, 0b1111):
        table[event] = 2
    capacity = Capacity(4, scale, tuple(table))
    return DecisionFrame(4, 2, scale, (0, 2), capacity)


@dataclass(frozen=True)
class DominanceDemo:
    """Numeric record of expected utility breaking both dominance axioms."""

    alpha: float
    preferred: tuple[float, float]
    rival: tuple[float, float]
    bound: float
    eu_preferred: float
    eu_rival: float
    eu_capped: float
    conjunctive_violated: bool
    mirror_preferred: tuple[float, float]
    mirror_rival: tuple[float, float]
    mirror_bound: float
    eu_mirror_preferred: float
    eu_mirror_rival: float
    eu_mirror_raised: float
    disjunctive_violated: bool


def eu_dominance_demo() -> DominanceDemo:
    """Show that averaging violates restricted conjunctive dominance.

    With two states weighted 0.93/0.07, the act paying (1000, 2) beats
    the act paying (3, 100), and the constant 10 beats the latter too;
    yet capping the first act at 10 drops it below the rival.  Negating
    all payoffs and swapping min for max yields the mirrored violation of
    restricted disjunctive dominance.
    """
    alpha = 0.93
    weights = (alpha, 1.0 - alpha)
    preferred = (1000.0, 2.0)
    rival = (3.0, 100.0)
    bound = 10.0
    eu_preferred = expected_utility(weights, preferred)
    eu_rival = expected_utility(weights, rival)
    eu_capped = expected_utility(weights, tuple(min(p, bound) for p in preferred))
    conjunctive_violated = (
        eu_preferred > eu_rival and bound > eu_rival and eu_capped < eu_rival
    )

    mirror_preferred = tuple(-p for p in rival)
    mirror_rival = tuple(-p for p in preferred)
    mirror_bound = -bound
    eu_mirror_preferred = expected_utility(weights, mirror_preferred)
    eu_mirror_rival = expected_utility(weights, mirror_rival)
    eu_mirror_raised = expected_utility(
        weights, tuple(max(p, mirror_bound) for p in mirror_rival)
    )
    disjunctive_violated = (
        eu_mirror_preferred > eu_mirror_rival
        and eu_mirror_preferred > mirror_bound
        and not eu_mirror_preferred > eu_mirror_raised
    )

    return DominanceDemo(
        alpha=alpha,
        preferred=preferred,
        rival=rival,
        bound=bound,
        eu_preferred=eu_preferred,
        eu_rival=eu_rival,
        eu_capped=eu_capped,
        conjunctive_violated=conjunctive_violated,
        mirror_preferred=mirror_preferred,
        mirror_rival=mirror_rival,
        mirror_bound=mirror_bound,
        eu_mirror_preferred=eu_mirror_preferred,
        eu_mirror_rival=eu_mirror_rival,
        eu_mirror_raised=eu_mirror_raised,
        disjunctive_violated=disjunctive_violated,
    )
