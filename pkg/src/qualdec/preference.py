"""Preference relations over acts and exhaustive axiom checking.

A relation is stored as a rank function over an enumerated act set:
lower rank means less preferred, equal rank means indifferent.  Rank
totality makes every relation a complete preorder by construction, so
checking the ranking axiom on pairwise data reduces to compressing that
data into ranks (which fails with a concrete witness when no ranks
exist).

Every other axiom is a quantified formula over acts, outcomes and
events; the checkers evaluate those formulas literally and exhaustively,
returning the first violating binding in the documented enumeration
order (acts in act-space order, then events in ascending mask order,
outcomes in index order).  Oversized quantifier spaces are refused, never
sampled.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from .acts import (
    Act,
    DecisionFrame,
    act_space,
    binary_act,
    combine_by,
    comonotonic_by,
    compound_act,
    compound_index_tables,
    constant_act,
)
from .capacity import Capacity
from .events import check_event, complement, event_members, iter_events

# Maximum number of act tuples a single exhaustive check may enumerate
# (256^3 = 64^4, so three-way checks cap at 256 acts and the four-act
# sure-thing check at 64).  QDT_BUDGET overrides it.
DEFAULT_BUDGET = 256 ** 3


def quantifier_budget(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get("QDT_BUDGET")
    if raw is not None:
        try:
            return int(raw)
        except ValueError as exc:
            raise ValueError(f"QDT_BUDGET must be an integer, got {raw!r}") from exc
    return DEFAULT_BUDGET


class BudgetExceededError(Exception):
    """An exhaustive check was refused because its quantifier space is too large."""

    def __init__(self, label: str, space: int, budget: int):
        super().__init__(
            f"{label}: quantifier space has {space} act tuples,"
            f" budget allows {budget}"
        )
        self.label = label
        self.space = space
        self.budget = budget


class RankingError(ValueError):
    """Pairwise preference data does not compress to a rank function."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


class Axiom(enum.Enum):
    """Checkable preference axioms; the label is the conventional name."""

    SAV1 = ("Sav 1", 0)
    SAV2 = ("Sav 2", 4)
    SAV3 = ("Sav 3", 3)
    SAV4 = ("Sav 4", 0)
    SAV4P = ("Sav 4'", 0)
    SAV5 = ("Sav 5", 0)
    WS3 = ("WS 3", 1)
    RCD = ("RCD", 2)
    RDD = ("RDD", 2)
    CD = ("CD", 3)
    DD = ("DD", 3)
    COD = ("CoD", 2)
    OPTIMISM = ("Optimism", 2)
    PESSIMISM = ("Pessimism", 2)

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def act_arity(self) -> int:
        """How many act quantifiers the axiom's formula carries."""
        return self.value[1]

    @classmethod
    def parse(cls, text: str) -> "Axiom":
        key = text.strip().lower().replace(" ", "").replace("'", "p")
        for axiom in cls:
            if key in (axiom.name.lower(), axiom.label.lower().replace(" ", "").replace("'", "p")):
                return axiom
        raise ValueError(f"unknown axiom {text!r}")


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: Axiom
    holds: bool
    witness: dict | None = None

    def __post_init__(self) -> None:
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the axiom fails")


@dataclass(frozen=True)
class PreferenceRelation:
    """A complete preorder over an enumerated act set, given by ranks."""

    frame: DecisionFrame
    acts: tuple[Act, ...]
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "acts", tuple(tuple(a) for a in self.acts))
        object.__setattr__(self, "ranks", tuple(self.ranks))
        if len(self.ranks) != len(self.acts):
            raise ValueError(
                f"{len(self.ranks)} ranks for {len(self.acts)} acts"
            )
        if not self.acts:
            raise ValueError("relation needs at least one act")
        seen = set()
        for act in self.acts:
            self.frame.check_act(act)
            if act in seen:
                raise ValueError(f"duplicate act {act}")
            seen.add(act)
        for rank in self.ranks:
            if not isinstance(rank, int) or rank < 0:
                raise ValueError(f"ranks must be non-negative integers, got {rank!r}")

    @classmethod
    def from_utilities(
        cls, frame: DecisionFrame, acts: Sequence[Act], values: Sequence
    ) -> "PreferenceRelation":
        """Rank acts by any comparable per-act values (dense ranks)."""
        distinct = sorted(set(values))
        position = {v: i for i, v in enumerate(distinct)}
        return cls(frame, tuple(acts), tuple(position[v] for v in values))

    @classmethod
    def from_pairwise(
        cls,
        frame: DecisionFrame,
        acts: Sequence[Act],
        leq: Callable[[Act, Act], bool] | Sequence[Sequence[bool]],
    ) -> "PreferenceRelation":
        """Compress pairwise at-most-as-good data into ranks.

        Raises RankingError (with a witness) when the data is incomplete
        or intransitive, i.e. when no rank function represents it.
        """
        acts = tuple(tuple(a) for a in acts)
        n = len(acts)
        if callable(leq):
            matrix = [[bool(leq(acts[i], acts[j])) for j in range(n)] for i in range(n)]
        else:
            matrix = [[bool(v) for v in row] for row in leq]
            if len(matrix) != n or any(len(row) != n for row in matrix):
                raise ValueError("pairwise matrix shape does not match the act list")
        for i in range(n):
            for j in range(n):
                if not matrix[i][j] and not matrix[j][i]:
                    raise RankingError(
                        "incomparable pair: ranking is not complete",
                        {"kind": "incomplete", "f": acts[i], "g": acts[j]},
                    )
        for i in range(n):
            for j in range(n):
                if not matrix[i][j]:
                    continue
                for k in range(n):
                    if matrix[j][k] and not matrix[i][k]:
                        raise RankingError(
                            "intransitive triple: ranking admits a strict cycle",
                            {
                                "kind": "intransitive",
                                "f": acts[i],
                                "g": acts[j],
                                "h": acts[k],
                            },
                        )
        below = [
            sum(1 for j in range(n) if matrix[j][i] and not matrix[i][j])
            for i in range(n)
        ]
        return cls.from_utilities(frame, acts, below)

    @cached_property
    def _rank_of(self) -> dict[Act, int]:
        return dict(zip(self.acts, self.ranks))

    @cached_property
    def is_full_space(self) -> bool:
        return self.acts == act_space(self.frame)

    @cached_property
    def outcome_order(self) -> tuple[int, ...]:
        return induced_outcome_order(self)

    def rank_of(self, act: Act) -> int:
        try:
            return self._rank_of[tuple(act)]
        except KeyError:
            raise ValueError(f"act {act} is not in the relation") from None

    def leq(self, f: Act, g: Act) -> bool:
        return self.rank_of(f) <= self.rank_of(g)

    def lt(self, f: Act, g: Act) -> bool:
        return self.rank_of(f) < self.rank_of(g)

    def indifferent(self, f: Act, g: Act) -> bool:
        return self.rank_of(f) == self.rank_of(g)


def induced_outcome_order(rel: PreferenceRelation) -> tuple[int, ...]:
    """Dense ranks of the outcomes, read off the ranking of constant acts."""
    raw = []
    for x in range(rel.frame.outcome_count):
        act = constant_act(rel.frame, x)
        rank = rel._rank_of.get(act)
        if rank is None:
            raise ValueError(f"constant act for outcome {x} is not in the relation")
        raw.append(rank)
    position = {v: i for i, v in enumerate(sorted(set(raw)))}
    return tuple(position[r] for r in raw)


# ---------------------------------------------------------------------------
# Likelihood over events


@dataclass(frozen=True)
class LikelihoodRelation:
    """Pairwise at-most-as-likely relation over events (masks index matrix)."""

    state_count: int
    matrix: tuple[tuple[bool, ...], ...]
    # Event pairs whose comparison depends on the chosen outcome pair; one
    # representative conflict is kept per pair.
    disagreements: tuple[dict, ...] = field(default=())

    def leq(self, a: int, b: int) -> bool:
        return self.matrix[check_event(a, self.state_count)][
            check_event(b, self.state_count)
        ]

    def lt(self, a: int, b: int) -> bool:
        return self.leq(a, b) and not self.leq(b, a)

    def equivalent(self, a: int, b: int) -> bool:
        return self.leq(a, b) and self.leq(b, a)


def induced_likelihood(rel: PreferenceRelation) -> LikelihoodRelation:
    """Relative likelihood of events from the ranking of two-outcome bets.

    Event a is at most as likely as event b when every bet on a is at
    most as good as the same bet on b, over all strictly ordered outcome
    pairs.  Pairs of events on which different outcome choices disagree
    are reported; they signal a projection (Sav 4) failure.
    """
    if not rel.is_full_space:
        raise ValueError("likelihood needs the full act space")
    frame = rel.frame
    order = rel.outcome_order
    pairs = [
        (x, y)
        for x in range(frame.outcome_count)
        for y in range(frame.outcome_count)
        if order[y] < order[x]
    ]
    if not pairs:
        raise ValueError(
            "no strictly ordered outcome pair: likelihood is undefined"
            " (non-triviality fails)"
        )
    bet_rank = {
        (x, y): [rel.rank_of(binary_act(frame, x, e, y)) for e in iter_events(frame.state_count)]
        for x, y in pairs
    }
    size = 1 << frame.state_count
    matrix = []
    disagreements = []
    for a in range(size):
        row = []
        for b in range(size):
            votes = [bet_rank[p][a] <= bet_rank[p][b] for p in pairs]
            row.append(all(votes))
            if any(votes) and not all(votes):
                yes = pairs[votes.index(True)]
                no = pairs[votes.index(False)]
                disagreements.append(
                    {
                        "event_a": a,
                        "event_b": b,
                        "x": yes[0],
                        "y": yes[1],
                        "x_prime": no[0],
                        "y_prime": no[1],
                    }
                )
        matrix.append(tuple(row))
    return LikelihoodRelation(frame.state_count, tuple(matrix), tuple(disagreements))


def likelihood_from_capacity(capacity: Capacity) -> LikelihoodRelation:
    """The comparison of capacity values, as a likelihood relation."""
    size = 1 << capacity.state_count
    matrix = tuple(
        tuple(capacity.table[a] <= capacity.table[b] for b in range(size))
        for a in range(size)
    )
    return LikelihoodRelation(capacity.state_count, matrix)


@dataclass(frozen=True)
class LikelihoodVerdict:
    holds: bool
    failed: str | None = None
    witness: dict | None = None


def _likelihood_matrix(
    relation: LikelihoodRelation | Sequence[Sequence[bool]],
) -> tuple[tuple[tuple[bool, ...], ...], int]:
    matrix = getattr(relation, "matrix", relation)
    matrix = tuple(tuple(bool(v) for v in row) for row in matrix)
    size = len(matrix)
    if size == 0 or size & (size - 1):
        raise ValueError(f"matrix must cover all 2^n events, got {size} rows")
    if any(len(row) != size for row in matrix):
        raise ValueError("likelihood matrix must be square")
    return matrix, size.bit_length() - 1


def _check_base_likelihood(matrix, size) -> LikelihoodVerdict | None:
    """A1 (complete preorder), A2 (non-trivial), A3 (bounded below by the empty event)."""
    for a in range(size):
        for b in range(size):
            if not matrix[a][b] and not matrix[b][a]:
                return LikelihoodVerdict(
                    False, "A1", {"property": "completeness", "event_a": a, "event_b": b}
                )
    for a in range(size):
        for b in range(size):
            if not matrix[a][b]:
                continue
            for c in range(size):
                if matrix[b][c] and not matrix[a][c]:
                    return LikelihoodVerdict(
                        False,
                        "A1",
                        {
                            "property": "transitivity",
                            "event_a": a,
                            "event_b": b,
                            "event_c": c,
                        },
                    )
    full = size - 1
    if not (matrix[0][full] and not matrix[full][0]):
        return LikelihoodVerdict(False, "A2", {"event_a": 0, "event_b": full})
    for a in range(size):
        if not matrix[0][a]:
            return LikelihoodVerdict(False, "A3", {"event": a})
    return None


def is_comparative_possibility(
    relation: LikelihoodRelation | Sequence[Sequence[bool]],
) -> LikelihoodVerdict:
    """A1-A3 plus union dominance: b <= c implies (a|b) <= (a|c) for all a."""
    matrix, _n = _likelihood_matrix(relation)
    size = len(matrix)
    base = _check_base_likelihood(matrix, size)
    if base is not None:
        return base
    for a in range(size):
        for b in range(size):
            for c in range(size):
                if matrix[b][c] and not matrix[a | b][a | c]:
                    return LikelihoodVerdict(
                        False, "Pi", {"event_a": a, "event_b": b, "event_c": c}
                    )
    return LikelihoodVerdict(True)


def is_comparative_probability(
    relation: LikelihoodRelation | Sequence[Sequence[bool]],
) -> LikelihoodVerdict:
    """A1-A3 plus additivity: for a disjoint from b and c, b <= c iff (a|b) <= (a|c)."""
    matrix, _n = _likelihood_matrix(relation)
    size = len(matrix)
    base = _check_base_likelihood(matrix, size)
    if base is not None:
        return base
    for a in range(size):
        for b in range(size):
            for c in range(size):
                if a & (b | c):
                    continue
                if matrix[b][c] != matrix[a | b][a | c]:
                    return LikelihoodVerdict(
                        False, "P", {"event_a": a, "event_b": b, "event_c": c}
                    )
    return LikelihoodVerdict(True)


# ---------------------------------------------------------------------------
# Null events


def _part_indices(frame: DecisionFrame, event: int) -> list[int]:
    """Act-index contributions of all outcome assignments on the event's states."""
    weights = [
        frame.outcome_count ** (frame.state_count - 1 - s)
        for s in event_members(event)
    ]
    parts = [0]
    for w in weights:
        parts = [p + d * w for p in parts for d in range(frame.outcome_count)]
    return parts


def is_null_event(rel: PreferenceRelation, event: int) -> bool:
    """True iff conditioning on the event blurs all preferences.

    Literally: every two acts compounded with any third act outside the
    event are indifferent.  Since such compounds depend only on the
    on-event and off-event parts, the triple quantifier collapses to an
    exact sweep over part combinations.
    """
    if not rel.is_full_space:
        raise ValueError("null-event test needs the full act space")
    check_event(event, rel.frame.state_count)
    on_parts = _part_indices(rel.frame, event)
    off_parts = _part_indices(rel.frame, complement(event, rel.frame.state_count))
    ranks = rel.ranks
    for off in off_parts:
        first = ranks[on_parts[0] + off]
        for on in on_parts:
            if ranks[on + off] != first:
                return False
    return True


# ---------------------------------------------------------------------------
# Axiom checkers


def _holds(axiom: Axiom) -> AxiomVerdict:
    return AxiomVerdict(axiom, True)


def _fails(axiom: Axiom, witness: dict) -> AxiomVerdict:
    return AxiomVerdict(axiom, False, witness)


def _check_sav1(rel: PreferenceRelation) -> AxiomVerdict:
    # Rank-backed relations are complete preorders by construction; pairwise
    # input that admits no ranks is rejected in from_pairwise with a witness.
    return _holds(Axiom.SAV1)


def _check_sav5(rel: PreferenceRelation) -> AxiomVerdict:
    order = rel.outcome_order
    if max(order) > 0:
        return _holds(Axiom.SAV5)
    return _fails(Axiom.SAV5, {"note": "all constant acts are indifferent"})


def _check_ws3(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    order = rel.outcome_order
    for x in range(frame.outcome_count):
        for y in range(frame.outcome_count):
            if order[x] > order[y]:
                continue
            cx = constant_act(frame, x)
            cy = constant_act(frame, y)
            for event in iter_events(frame.state_count):
                for h in rel.acts:
                    if not rel.leq(
                        compound_act(frame, cx, event, h),
                        compound_act(frame, cy, event, h),
                    ):
                        return _fails(
                            Axiom.WS3, {"x": x, "y": y, "event": event, "h": h}
                        )
    return _holds(Axiom.WS3)


def _check_sav3(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    order = rel.outcome_order
    null = {
        event
        for event in iter_events(frame.state_count)
        if is_null_event(rel, event)
    }
    for x in range(frame.outcome_count):
        cx = constant_act(frame, x)
        for y in range(frame.outcome_count):
            cy = constant_act(frame, y)
            expected = order[x] <= order[y]
            for event in iter_events(frame.state_count):
                if event in null:
                    continue
                for h in rel.acts:
                    via_h = rel.leq(
                        compound_act(frame, cx, event, h),
                        compound_act(frame, cy, event, h),
                    )
                    if via_h != expected:
                        return _fails(
                            Axiom.SAV3,
                            {
                                "x": x,
                                "y": y,
                                "event": event,
                                "h": h,
                                "conditional_leq": via_h,
                                "outcome_leq": expected,
                            },
                        )
    return _holds(Axiom.SAV3)


def _bet_ranks(rel: PreferenceRelation) -> dict[tuple[int, int], list[int]]:
    frame = rel.frame
    order = rel.outcome_order
    out = {}
    for x in range(frame.outcome_count):
        for y in range(frame.outcome_count):
            if order[y] < order[x]:
                out[(x, y)] = [
                    rel.rank_of(binary_act(frame, x, e, y))
                    for e in iter_events(frame.state_count)
                ]
    return out


def _check_sav4(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    bets = _bet_ranks(rel)
    for (x, xp), bx in bets.items():
        for (y, yp), by in bets.items():
            for a in iter_events(frame.state_count):
                for b in iter_events(frame.state_count):
                    if (bx[a] <= bx[b]) != (by[a] <= by[b]):
                        return _fails(
                            Axiom.SAV4,
                            {
                                "x": x,
                                "x_prime": xp,
                                "y": y,
                                "y_prime": yp,
                                "event_a": a,
                                "event_b": b,
                            },
                        )
    return _holds(Axiom.SAV4)


def _check_sav4p(rel: PreferenceRelation) -> AxiomVerdict:
    """Weak projection of bets over events.

    Clause 1: a strict bet comparison for one strictly ordered outcome
    pair forbids the strict reversal for any other pair (the comparison
    may collapse to indifference, so the conclusion is weak preference).
    Clause 2: when the first pair brackets the second (x >= y > y' >= x'
    on the constant-act order), strictness propagates from the inner pair
    to the outer one.
    """
    frame = rel.frame
    order = rel.outcome_order
    bets = _bet_ranks(rel)
    for (x, xp), bx in bets.items():
        for (y, yp), by in bets.items():
            interleaved = (
                order[x] >= order[y] and order[y] > order[yp] and order[yp] >= order[xp]
            )
            for a in iter_events(frame.state_count):
                for b in iter_events(frame.state_count):
                    if bx[a] < bx[b] and not by[a] <= by[b]:
                        return _fails(
                            Axiom.SAV4P,
                            {
                                "clause": 1,
                                "x": x,
                                "x_prime": xp,
                                "y": y,
                                "y_prime": yp,
                                "event_a": a,
                                "event_b": b,
                            },
                        )
                    if interleaved and by[a] < by[b] and not bx[a] < bx[b]:
                        return _fails(
                            Axiom.SAV4P,
                            {
                                "clause": 2,
                                "x": x,
                                "x_prime": xp,
                                "y": y,
                                "y_prime": yp,
                                "event_a": a,
                                "event_b": b,
                            },
                        )
    return _holds(Axiom.SAV4P)


def _check_rcd(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    order = rel.outcome_order
    consts = [constant_act(frame, x) for x in range(frame.outcome_count)]
    const_rank = [rel.rank_of(c) for c in consts]
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            if rel.rank_of(g) <= rf:
                continue
            for y in range(frame.outcome_count):
                if const_rank[y] <= rf:
                    continue
                capped = combine_by(order, g, consts[y], "worst")
                if not rel.rank_of(capped) > rf:
                    return _fails(Axiom.RCD, {"f": f, "g": g, "outcome": y})
    return _holds(Axiom.RCD)


def _check_rdd(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    order = rel.outcome_order
    consts = [constant_act(frame, x) for x in range(frame.outcome_count)]
    const_rank = [rel.rank_of(c) for c in consts]
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            if rel.rank_of(g) >= rf:
                continue
            for y in range(frame.outcome_count):
                if const_rank[y] >= rf:
                    continue
                raised = combine_by(order, g, consts[y], "best")
                if not rel.rank_of(raised) < rf:
                    return _fails(Axiom.RDD, {"f": f, "g": g, "outcome": y})
    return _holds(Axiom.RDD)


def _check_dd(rel: PreferenceRelation) -> AxiomVerdict:
    order = rel.outcome_order
    joins: dict[tuple[Act, Act], int] = {}
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            if rel.rank_of(g) >= rf:
                continue
            for h in rel.acts:
                if rel.rank_of(h) >= rf:
                    continue
                key = (g, h)
                rank = joins.get(key)
                if rank is None:
                    rank = rel.rank_of(combine_by(order, g, h, "best"))
                    joins[key] = rank
                if not rank < rf:
                    return _fails(Axiom.DD, {"f": f, "g": g, "h": h})
    return _holds(Axiom.DD)


def _check_cd(rel: PreferenceRelation) -> AxiomVerdict:
    order = rel.outcome_order
    meets: dict[tuple[Act, Act], int] = {}
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            if rel.rank_of(g) <= rf:
                continue
            for h in rel.acts:
                if rel.rank_of(h) <= rf:
                    continue
                key = (g, h)
                rank = meets.get(key)
                if rank is None:
                    rank = rel.rank_of(combine_by(order, g, h, "worst"))
                    meets[key] = rank
                if not rank > rf:
                    return _fails(Axiom.CD, {"f": f, "g": g, "h": h})
    return _holds(Axiom.CD)


def _check_cod(rel: PreferenceRelation) -> AxiomVerdict:
    order = rel.outcome_order
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            if not comonotonic_by(order, f, g):
                continue
            rg = rel.rank_of(g)
            rj = rel.rank_of(combine_by(order, f, g, "best"))
            if rj > rf and rj != rg:
                return _fails(Axiom.COD, {"clause": "join", "f": f, "g": g})
            rm = rel.rank_of(combine_by(order, f, g, "worst"))
            if rm < rf and rm != rg:
                return _fails(Axiom.COD, {"clause": "meet", "f": f, "g": g})
    return _holds(Axiom.COD)


def _check_optimism(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            for event in iter_events(frame.state_count):
                if rel.rank_of(compound_act(frame, f, event, g)) < rf:
                    if not rf <= rel.rank_of(compound_act(frame, g, event, f)):
                        return _fails(
                            Axiom.OPTIMISM, {"f": f, "g": g, "event": event}
                        )
    return _holds(Axiom.OPTIMISM)


def _check_pessimism(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    for f in rel.acts:
        rf = rel.rank_of(f)
        for g in rel.acts:
            for event in iter_events(frame.state_count):
                if rel.rank_of(compound_act(frame, f, event, g)) > rf:
                    if not rel.rank_of(compound_act(frame, g, event, f)) <= rf:
                        return _fails(
                            Axiom.PESSIMISM, {"f": f, "g": g, "event": event}
                        )
    return _holds(Axiom.PESSIMISM)


def _check_sav2(rel: PreferenceRelation) -> AxiomVerdict:
    frame = rel.frame
    ranks = rel.ranks
    n_acts = len(rel.acts)
    on, off = compound_index_tables(frame, rel.acts)
    events = range(1 << frame.state_count)
    for fi in range(n_acts):
        for gi in range(n_acts):
            # Existence first: for some event, replacing the off-event act
            # flips the comparison.  Only then scan for the first witness.
            violated = False
            for event in events:
                onf, ong, offs = on[event][fi], on[event][gi], off[event]
                seen_true = seen_false = False
                for hi in range(n_acts):
                    if ranks[onf + offs[hi]] <= ranks[ong + offs[hi]]:
                        seen_true = True
                    else:
                        seen_false = True
                    if seen_true and seen_false:
                        violated = True
                        break
                if violated:
                    break
            if not violated:
                continue
            for hi in range(n_acts):
                for hpi in range(n_acts):
                    for event in events:
                        onf, ong, offs = on[event][fi], on[event][gi], off[event]
                        if (
                            ranks[onf + offs[hi]] <= ranks[ong + offs[hi]]
                            and ranks[onf + offs[hpi]] > ranks[ong + offs[hpi]]
                        ):
                            return _fails(
                                Axiom.SAV2,
                                {
                                    "f": rel.acts[fi],
                                    "g": rel.acts[gi],
                                    "h": rel.acts[hi],
                                    "h_prime": rel.acts[hpi],
                                    "event": event,
                                },
                            )
    return _holds(Axiom.SAV2)


_CHECKERS = {
    Axiom.SAV1: _check_sav1,
    Axiom.SAV2: _check_sav2,
    Axiom.SAV3: _check_sav3,
    Axiom.SAV4: _check_sav4,
    Axiom.SAV4P: _check_sav4p,
    Axiom.SAV5: _check_sav5,
    Axiom.WS3: _check_ws3,
    Axiom.RCD: _check_rcd,
    Axiom.RDD: _check_rdd,
    Axiom.CD: _check_cd,
    Axiom.DD: _check_dd,
    Axiom.COD: _check_cod,
    Axiom.OPTIMISM: _check_optimism,
    Axiom.PESSIMISM: _check_pessimism,
}


def check_axiom(
    rel: PreferenceRelation, axiom: Axiom, budget: int | None = None
) -> AxiomVerdict:
    """Exhaustively evaluate one axiom; first violating binding wins.

    Every axiom whose formula quantifies over acts requires the relation
    to cover the full act space.  Quantifier spaces larger than the
    budget are refused with BudgetExceededError.
    """
    if axiom not in (Axiom.SAV1, Axiom.SAV5) and not rel.is_full_space:
        raise ValueError(f"{axiom.label} needs the full act space")
    if axiom.act_arity:
        space = len(rel.acts) ** axiom.act_arity
        limit = quantifier_budget(budget)
        if space > limit:
            raise BudgetExceededError(axiom.label, space, limit)
    return _CHECKERS[axiom](rel)


def replay_witness(rel: PreferenceRelation, verdict: AxiomVerdict) -> bool:
    """Re-evaluate the instance named by a failing verdict, from scratch.

    Returns True iff the witness reproduces a genuine violation; used to
    make every verdict self-validating.
    """
    if verdict.holds or verdict.witness is None:
        raise ValueError("only failing verdicts carry a witness to replay")
    w = verdict.witness
    frame = rel.frame
    order = rel.outcome_order
    axiom = verdict.axiom
    if axiom is Axiom.SAV2:
        f, g, h, hp, e = w["f"], w["g"], w["h"], w["h_prime"], w["event"]
        return rel.leq(
            compound_act(frame, f, e, h), compound_act(frame, g, e, h)
        ) and not rel.leq(
            compound_act(frame, f, e, hp), compound_act(frame, g, e, hp)
        )
    if axiom is Axiom.SAV3:
        cx = constant_act(frame, w["x"])
        cy = constant_act(frame, w["y"])
        if is_null_event(rel, w["event"]):
            return False
        via_h = rel.leq(
            compound_act(frame, cx, w["event"], w["h"]),
            compound_act(frame, cy, w["event"], w["h"]),
        )
        return via_h != (order[w["x"]] <= order[w["y"]])
    if axiom in (Axiom.SAV4, Axiom.SAV4P):
        bx = lambda e: rel.rank_of(binary_act(frame, w["x"], e, w["x_prime"]))
        by = lambda e: rel.rank_of(binary_act(frame, w["y"], e, w["y_prime"]))
        a, b = w["event_a"], w["event_b"]
        if order[w["x_prime"]] >= order[w["x"]] or order[w["y_prime"]] >= order[w["y"]]:
            return False
        if axiom is Axiom.SAV4:
            return (bx(a) <= bx(b)) != (by(a) <= by(b))
        if w["clause"] == 1:
            return bx(a) < bx(b) and not by(a) <= by(b)
        interleaved = (
            order[w["x"]] >= order[w["y"]]
            and order[w["y"]] > order[w["y_prime"]]
            and order[w["y_prime"]] >= order[w["x_prime"]]
        )
        return interleaved and by(a) < by(b) and not bx(a) < bx(b)
    if axiom is Axiom.SAV5:
        return max(order) == 0
    if axiom is Axiom.WS3:
        cx = constant_act(frame, w["x"])
        cy = constant_act(frame, w["y"])
        return order[w["x"]] <= order[w["y"]] and not rel.leq(
            compound_act(frame, cx, w["event"], w["h"]),
            compound_act(frame, cy, w["event"], w["h"]),
        )
    if axiom is Axiom.RCD:
        cy = constant_act(frame, w["outcome"])
        return (
            rel.lt(w["f"], w["g"])
            and rel.lt(w["f"], cy)
            and not rel.lt(w["f"], combine_by(order, w["g"], cy, "worst"))
        )
    if axiom is Axiom.RDD:
        cy = constant_act(frame, w["outcome"])
        return (
            rel.lt(w["g"], w["f"])
            and rel.lt(cy, w["f"])
            and not rel.lt(combine_by(order, w["g"], cy, "best"), w["f"])
        )
    if axiom is Axiom.DD:
        return (
            rel.lt(w["g"], w["f"])
            and rel.lt(w["h"], w["f"])
            and not rel.lt(combine_by(order, w["g"], w["h"], "best"), w["f"])
        )
    if axiom is Axiom.CD:
        return (
            rel.lt(w["f"], w["g"])
            and rel.lt(w["f"], w["h"])
            and not rel.lt(w["f"], combine_by(order, w["g"], w["h"], "worst"))
        )
    if axiom is Axiom.COD:
        if not comonotonic_by(order, w["f"], w["g"]):
            return False
        if w["clause"] == "join":
            j = combine_by(order, w["f"], w["g"], "best")
            return rel.lt(w["f"], j) and not rel.indifferent(j, w["g"])
        m = combine_by(order, w["f"], w["g"], "worst")
        return rel.lt(m, w["f"]) and not rel.indifferent(m, w["g"])
    if axiom is Axiom.OPTIMISM:
        fg = compound_act(frame, w["f"], w["event"], w["g"])
        gf = compound_act(frame, w["g"], w["event"], w["f"])
        return rel.lt(fg, w["f"]) and not rel.leq(w["f"], gf)
    if axiom is Axiom.PESSIMISM:
        fg = compound_act(frame, w["f"], w["event"], w["g"])
        gf = compound_act(frame, w["g"], w["event"], w["f"])
        return rel.lt(w["f"], fg) and not rel.leq(gf, w["f"])
    raise ValueError(f"no replay rule for {axiom}")
