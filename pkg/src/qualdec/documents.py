"""JSON document formats for frames and relations.

A frame document declares the scale size, labelled states and outcomes,
the per-outcome utility level, and a capacity given either as an explicit
event table (events are sorted state-label lists) or as a possibility or
necessity distribution.  An optional act list names acts of interest.

A relation document points at a frame (by path or inline), and either
lists explicit ranks per act label or carries the directive
``"induce": "capacity"`` to rank the full act space by the frame's
Sugeno utility.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .acts import Act, DecisionFrame, act_space
from .capacity import (
    Capacity,
    CapacityError,
    PossibilityDistribution,
    necessity_capacity,
    possibility_capacity,
)
from .events import event_members, event_of, iter_events
from .preference import PreferenceRelation
from .scale import Scale
from .synthesis import induce_preorder


class DocumentError(ValueError):
    """Unparseable or inconsistent document; message names the offending field."""


@dataclass(frozen=True)
class FrameDocument:
    states: tuple[str, ...]
    outcomes: tuple[str, ...]
    frame: DecisionFrame
    capacity_kind: str  # "table" | "possibility" | "necessity"
    distribution: PossibilityDistribution | None = None
    named_acts: tuple[tuple[str, Act], ...] = ()

    def act_label(self, act: Act) -> str:
        for label, named in self.named_acts:
            if named == act:
                return label
        return ",".join(self.outcomes[o] for o in act)

    def event_labels(self, event: int) -> list[str]:
        return [self.states[s] for s in event_members(event)]

    def parse_act(self, text: str) -> Act:
        for label, named in self.named_acts:
            if label == text:
                return named
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != len(self.states):
            raise DocumentError(
                f"act {text!r}: expected {len(self.states)} outcomes, got {len(parts)}"
            )
        try:
            return tuple(self.outcomes.index(p) for p in parts)
        except ValueError:
            bad = next(p for p in parts if p not in self.outcomes)
            raise DocumentError(f"act {text!r}: unknown outcome {bad!r}") from None


def _require(data: dict, key: str, kind, where: str):
    if key not in data:
        raise DocumentError(f"{where}: missing field {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(
            f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _labels(raw, where: str) -> tuple[str, ...]:
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        raise DocumentError(f"{where}: expected a list of strings")
    if len(set(raw)) != len(raw):
        raise DocumentError(f"{where}: duplicate labels")
    return tuple(raw)


def parse_frame(data: dict) -> FrameDocument:
    if not isinstance(data, dict):
        raise DocumentError("frame: expected a JSON object")
    scale_size = _require(data, "scale", int, "frame")
    try:
        scale = Scale(scale_size)
    except ValueError as exc:
        raise DocumentError(f"frame.scale: {exc}") from exc
    states = _labels(_require(data, "states", list, "frame"), "frame.states")
    outcomes = _labels(_require(data, "outcomes", list, "frame"), "frame.outcomes")
    utility = _require(data, "utility", dict, "frame")
    if set(utility) != set(outcomes):
        raise DocumentError(
            "frame.utility: keys must be exactly the outcome labels"
        )
    mu = tuple(utility[o] for o in outcomes)
    for label, level in zip(outcomes, mu):
        if not isinstance(level, int):
            raise DocumentError(f"frame.utility.{label}: expected an integer level")

    cap_data = _require(data, "capacity", dict, "frame")
    kind = cap_data.get("kind", "table")
    distribution = None
    if kind == "table":
        capacity = _parse_capacity_table(cap_data, states, scale)
    elif kind in ("possibility", "necessity"):
        dist_data = _require(cap_data, "distribution", dict, "frame.capacity")
        if set(dist_data) != set(states):
            raise DocumentError(
                "frame.capacity.distribution: keys must be exactly the state labels"
            )
        values = tuple(dist_data[s] for s in states)
        if not all(isinstance(v, int) for v in values):
            raise DocumentError(
                "frame.capacity.distribution: levels must be integers"
            )
        try:
            distribution = PossibilityDistribution(scale, values)
        except ValueError as exc:
            raise DocumentError(f"frame.capacity.distribution: {exc}") from exc
        capacity = (
            possibility_capacity(distribution)
            if kind == "possibility"
            else necessity_capacity(distribution)
        )
    else:
        raise DocumentError(
            f"frame.capacity.kind: expected table|possibility|necessity, got {kind!r}"
        )

    try:
        frame = DecisionFrame(len(states), len(outcomes), scale, mu, capacity)
    except ValueError as exc:
        raise DocumentError(f"frame: {exc}") from exc

    named: list[tuple[str, Act]] = []
    if "acts" in data:
        acts_data = _require(data, "acts", dict, "frame")
        for label, entries in acts_data.items():
            if not isinstance(entries, list) or len(entries) != len(states):
                raise DocumentError(
                    f"frame.acts.{label}: expected one outcome per state"
                )
            try:
                act = tuple(outcomes.index(e) for e in entries)
            except ValueError:
                raise DocumentError(
                    f"frame.acts.{label}: unknown outcome label"
                ) from None
            named.append((label, act))
    return FrameDocument(states, outcomes, frame, kind, distribution, tuple(named))


def _parse_capacity_table(cap_data: dict, states: tuple[str, ...], scale: Scale) -> Capacity:
    entries = _require(cap_data, "table", list, "frame.capacity")
    table: dict[int, int] = {}
    for i, entry in enumerate(entries):
        where = f"frame.capacity.table[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: expected an object")
        event_labels = _require(entry, "event", list, where)
        value = _require(entry, "value", int, where)
        try:
            indices = [states.index(s) for s in event_labels]
        except ValueError:
            bad = next(s for s in event_labels if s not in states)
            raise DocumentError(f"{where}.event: unknown state {bad!r}") from None
        mask = event_of(indices, len(states))
        if mask in table:
            raise DocumentError(f"{where}.event: duplicate event")
        table[mask] = value
    missing = [m for m in iter_events(len(states)) if m not in table]
    if missing:
        raise DocumentError(
            f"frame.capacity.table: missing {len(missing)} events, first"
            f" {[ [states[s] for s in event_members(m)] for m in missing[:3] ]}"
        )
    # CapacityError propagates as-is so callers can report the witness pair.
    return Capacity(len(states), scale, tuple(table[m] for m in iter_events(len(states))))


def frame_to_data(doc: FrameDocument) -> dict:
    """Serialize back to the JSON layout; parse(frame_to_data(d)) == d."""
    frame = doc.frame
    data: dict = {
        "scale": frame.scale.size,
        "states": list(doc.states),
        "outcomes": list(doc.outcomes),
        "utility": {label: frame.mu[i] for i, label in enumerate(doc.outcomes)},
    }
    if doc.capacity_kind == "table":
        data["capacity"] = {
            "kind": "table",
            "table": [
                {"event": doc.event_labels(mask), "value": frame.capacity.table[mask]}
                for mask in iter_events(frame.state_count)
            ],
        }
    else:
        data["capacity"] = {
            "kind": doc.capacity_kind,
            "distribution": {
                label: doc.distribution.values[i]
                for i, label in enumerate(doc.states)
            },
        }
    if doc.named_acts:
        data["acts"] = {
            label: [doc.outcomes[o] for o in act] for label, act in doc.named_acts
        }
    return data


def load_frame(path: str | Path) -> FrameDocument:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    except OSError as exc:
        raise DocumentError(f"{path}: {exc}") from exc
    return parse_frame(data)


@dataclass(frozen=True)
class RelationDocument:
    frame_doc: FrameDocument
    relation: PreferenceRelation
    source: str  # "ranks" | "induce"


def parse_relation(data: dict, base_dir: str | Path = ".") -> RelationDocument:
    if not isinstance(data, dict):
        raise DocumentError("relation: expected a JSON object")
    frame_ref = _require(data, "frame", None, "relation")
    if isinstance(frame_ref, str):
        frame_doc = load_frame(Path(base_dir) / frame_ref)
    elif isinstance(frame_ref, dict):
        frame_doc = parse_frame(frame_ref)
    else:
        raise DocumentError("relation.frame: expected a path or an inline frame object")

    has_ranks = "ranks" in data
    has_induce = "induce" in data
    if has_ranks == has_induce:
        raise DocumentError("relation: give exactly one of 'ranks' or 'induce'")

    if has_induce:
        directive = data["induce"]
        if directive not in ("capacity", True):
            raise DocumentError(
                f"relation.induce: expected 'capacity', got {directive!r}"
            )
        relation = induce_preorder(frame_doc.frame)
        return RelationDocument(frame_doc, relation, "induce")

    ranks_data = _require(data, "ranks", dict, "relation")
    if frame_doc.named_acts:
        declared = {label: act for label, act in frame_doc.named_acts}
    else:
        declared = {
            frame_doc.act_label(act): act for act in act_space(frame_doc.frame)
        }
    missing = sorted(set(declared) - set(ranks_data))
    extra = sorted(set(ranks_data) - set(declared))
    if missing or extra:
        raise DocumentError(
            f"relation.ranks: must cover the declared act set exactly once"
            f" (missing {missing[:3]}, unknown {extra[:3]})"
        )
    acts = []
    ranks = []
    for label in declared:
        rank = ranks_data[label]
        if not isinstance(rank, int) or rank < 0:
            raise DocumentError(
                f"relation.ranks.{label}: expected a non-negative integer"
            )
        acts.append(declared[label])
        ranks.append(rank)
    try:
        relation = PreferenceRelation(frame_doc.frame, tuple(acts), tuple(ranks))
    except ValueError as exc:
        raise DocumentError(f"relation: {exc}") from exc
    return RelationDocument(frame_doc, relation, "ranks")


def load_relation(path: str | Path) -> RelationDocument:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    except OSError as exc:
        raise DocumentError(f"{path}: {exc}") from exc
    return parse_relation(data, path.parent)
