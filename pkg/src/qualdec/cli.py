"""Command-line front end.

Subcommands: eval, check-capacity, check-axioms, synthesize,
counterexample, compare.  Human-readable reports go to stdout (one
verdict per line, axioms under their conventional names); --json emits
the same verdicts as a machine-readable object, byte-stable across runs.

Exit status: 0 = success / all checks hold, 1 = violation or witness
found, 2 = usage or input error.  The environment variable QDT_BUDGET
overrides the exhaustive-check budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acts import act_space
from .capacity import CapacityError, classify_capacity
from .documents import DocumentError, FrameDocument, load_frame, load_relation
from .evaluate import (
    expected_utility,
    sugeno_levelcut,
    sugeno_median,
    sugeno_outcome,
)
from .preference import (
    Axiom,
    BudgetExceededError,
    PreferenceRelation,
    check_axiom,
)
from .synthesis import (
    AxiomRefusalError,
    RepresentationError,
    eu_dominance_demo,
    find_sure_thing_violation,
    synthesize_possibilistic,
    synthesize_representation,
)

_ACT_KEYS = {"f", "g", "h", "h_prime"}
_EVENT_KEYS = {"event", "event_a", "event_b", "event_c"}
_OUTCOME_KEYS = {"x", "y", "x_prime", "y_prime", "outcome"}


def _witness_data(doc: FrameDocument, witness: dict) -> dict:
    out = {}
    for key, value in witness.items():
        if key in _ACT_KEYS:
            out[key] = doc.act_label(value)
        elif key in _EVENT_KEYS:
            out[key] = doc.event_labels(value)
        elif key in _OUTCOME_KEYS:
            out[key] = doc.outcomes[value]
        else:
            out[key] = value
    return out


def _witness_text(doc: FrameDocument, witness: dict) -> str:
    parts = []
    for key, value in _witness_data(doc, witness).items():
        if isinstance(value, list):
            value = "{" + ",".join(value) + "}"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_eval(args) -> int:
    doc = load_frame(args.frame)
    frame = doc.frame
    if args.all:
        targets = [(doc.act_label(a), a) for a in act_space(frame)]
    elif args.act is not None:
        targets = [(args.act, doc.parse_act(args.act))]
    elif doc.named_acts:
        targets = list(doc.named_acts)
    else:
        targets = [(doc.act_label(a), a) for a in act_space(frame)]

    methods = {
        "levelcut": sugeno_levelcut,
        "outcome": sugeno_outcome,
        "median": sugeno_median,
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    rows = []
    disagreement = None
    for label, act in targets:
        values = {name: methods[name](frame, act) for name in chosen}
        if len(set(values.values())) > 1 and disagreement is None:
            disagreement = label
        rows.append({"act": label, "utilities": values})
    if args.json:
        _emit_json(
            {
                "command": "eval",
                "results": rows,
                "agreement": disagreement is None,
            }
        )
    else:
        for row in rows:
            values = " ".join(f"{k}={v}" for k, v in row["utilities"].items())
            print(f"{row['act']}: {values}")
    if disagreement is not None:
        print(
            f"BUG: evaluation methods disagree on act {disagreement}",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_check_capacity(args) -> int:
    try:
        doc = load_frame(args.frame)
    except CapacityError as exc:
        payload = {"command": "check-capacity", "valid": False, "error": str(exc)}
        if exc.witness is not None:
            payload["witness"] = {"subset": exc.witness[0], "superset": exc.witness[1]}
        if args.json:
            _emit_json(payload)
        else:
            print(f"capacity INVALID: {exc}")
        return 1
    traits = classify_capacity(doc.frame.capacity)
    payload = {
        "command": "check-capacity",
        "valid": True,
        "maxitive": traits.maxitive,
        "minitive": traits.minitive,
    }
    if traits.maxitive_witness is not None:
        payload["maxitive_witness"] = [
            doc.event_labels(e) for e in traits.maxitive_witness
        ]
    if traits.minitive_witness is not None:
        payload["minitive_witness"] = [
            doc.event_labels(e) for e in traits.minitive_witness
        ]
    if args.json:
        _emit_json(payload)
    else:
        print("capacity valid")
        print(f"maxitive: {traits.maxitive}")
        print(f"minitive: {traits.minitive}")
    return 0


def _parse_axioms(spec: str) -> list[Axiom]:
    if spec.strip().lower() == "all":
        return list(Axiom)
    return [Axiom.parse(part) for part in spec.split(",") if part.strip()]


def _cmd_check_axioms(args) -> int:
    rel_doc = load_relation(args.relation)
    axioms = _parse_axioms(args.axioms)
    results = []
    refused = []
    for axiom in axioms:
        try:
            verdict = check_axiom(rel_doc.relation, axiom)
        except BudgetExceededError as exc:
            refused.append((axiom, exc))
            continue
        results.append(verdict)
    payload_results = []
    any_failure = False
    for verdict in results:
        entry = {"axiom": verdict.axiom.label, "holds": verdict.holds}
        if verdict.witness is not None:
            entry["witness"] = _witness_data(rel_doc.frame_doc, verdict.witness)
            any_failure = True
        payload_results.append(entry)
    if args.json:
        _emit_json(
            {
                "command": "check-axioms",
                "results": payload_results,
                "refused": [
                    {"axiom": ax.label, "space": exc.space, "budget": exc.budget}
                    for ax, exc in refused
                ],
            }
        )
    else:
        for verdict in results:
            if verdict.holds:
                print(f"{verdict.axiom.label}: holds")
            else:
                witness = _witness_text(rel_doc.frame_doc, verdict.witness)
                print(f"{verdict.axiom.label}: FAILS  {witness}")
    for axiom, exc in refused:
        print(
            f"refused {axiom.label}: quantifier space {exc.space} exceeds"
            f" budget {exc.budget}",
            file=sys.stderr,
        )
    if refused:
        return 2
    return 1 if any_failure else 0


def _cmd_synthesize(args) -> int:
    rel_doc = load_relation(args.relation)
    doc = rel_doc.frame_doc
    try:
        if args.mode == "general":
            rep = synthesize_representation(rel_doc.relation)
            payload = {
                "command": "synthesize",
                "mode": "general",
                "verified": True,
                "levels": rep.scale.size,
                "utility": {
                    doc.outcomes[i]: rep.mu[i] for i in range(len(doc.outcomes))
                },
                "capacity": [
                    {"event": doc.event_labels(e), "value": rep.capacity.table[e]}
                    for e in range(1 << rep.capacity.state_count)
                ],
            }
        else:
            pos = synthesize_possibilistic(rel_doc.relation, args.mode)
            payload = {
                "command": "synthesize",
                "mode": pos.mode,
                "verified": True,
                "levels": pos.scale.size,
                "utility": {
                    doc.outcomes[i]: pos.mu[i] for i in range(len(doc.outcomes))
                },
                "distribution": {
                    doc.states[s]: pos.distribution[s]
                    for s in range(len(doc.states))
                },
            }
            if pos.unreversed_form_agrees is not None:
                payload["unreversed_form_agrees"] = pos.unreversed_form_agrees
    except AxiomRefusalError as exc:
        verdict = exc.verdict
        if args.json:
            _emit_json(
                {
                    "command": "synthesize",
                    "mode": args.mode,
                    "refused": verdict.axiom.label,
                    "witness": _witness_data(doc, verdict.witness)
                    if verdict.witness
                    else None,
                }
            )
        else:
            witness = (
                _witness_text(doc, verdict.witness) if verdict.witness else ""
            )
            print(f"refused: {verdict.axiom.label} fails  {witness}".rstrip())
        return 1
    if args.json:
        _emit_json(payload)
    else:
        print(f"mode: {payload['mode']}")
        print(f"levels: {payload['levels']}")
        for label, level in payload["utility"].items():
            print(f"utility {label}: {level}")
        if "capacity" in payload:
            for entry in payload["capacity"]:
                print(
                    "capacity {" + ",".join(entry["event"]) + "}: "
                    + str(entry["value"])
                )
        else:
            for label, level in payload["distribution"].items():
                print(f"distribution {label}: {level}")
            if "unreversed_form_agrees" in payload:
                print(
                    f"unreversed form agrees: {payload['unreversed_form_agrees']}"
                )
        print("verified: true")
    return 0


def _cmd_counterexample(args) -> int:
    if args.kind == "eu-rcd":
        demo = eu_dominance_demo()
        payload = {
            "command": "counterexample",
            "kind": "eu-rcd",
            "alpha": demo.alpha,
            "eu_preferred": demo.eu_preferred,
            "eu_rival": demo.eu_rival,
            "eu_capped": demo.eu_capped,
            "bound": demo.bound,
            "conjunctive_violated": demo.conjunctive_violated,
            "mirror": {
                "eu_preferred": demo.eu_mirror_preferred,
                "eu_rival": demo.eu_mirror_rival,
                "eu_raised": demo.eu_mirror_raised,
                "bound": demo.mirror_bound,
                "disjunctive_violated": demo.disjunctive_violated,
            },
        }
        if args.json:
            _emit_json(payload)
        else:
            print(f"EU(preferred) = {demo.eu_preferred:.2f}")
            print(f"EU(rival)     = {demo.eu_rival:.2f}")
            print(f"EU(capped)    = {demo.eu_capped:.2f}  (cap {demo.bound:g})")
            print(f"conjunctive dominance violated: {demo.conjunctive_violated}")
            print(f"disjunctive mirror violated: {demo.disjunctive_violated}")
        return 1 if demo.conjunctive_violated else 0
    # kind == "surething"
    if args.frame is None:
        return _error("counterexample --kind surething needs a FRAME")
    doc = load_frame(args.frame)
    witness = find_sure_thing_violation(doc.frame)
    if args.json:
        _emit_json(
            {
                "command": "counterexample",
                "kind": "surething",
                "witness": _witness_data(doc, witness) if witness else None,
            }
        )
    else:
        if witness is None:
            print("no sure-thing violation found")
        else:
            print(f"sure-thing violation: {_witness_text(doc, witness)}")
    return 1 if witness is not None else 0


def _dense_float_ranks(values: list[float], tol: float = 1e-9) -> list[int]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0] * len(values)
    rank = 0
    for pos, i in enumerate(order):
        if pos and values[i] - values[order[pos - 1]] > tol:
            rank += 1
        ranks[i] = rank
    return ranks


def _cmd_compare(args) -> int:
    doc = load_frame(args.frame)
    frame = doc.frame
    try:
        weights = [float(p) for p in args.probabilities.split(",")]
    except ValueError:
        return _error(f"--probabilities: expected comma-separated numbers")
    if len(weights) != frame.state_count:
        return _error(
            f"--probabilities: expected {frame.state_count} entries,"
            f" got {len(weights)}"
        )
    acts = act_space(frame)
    sugeno = [sugeno_levelcut(frame, a) for a in acts]
    numeric = [
        expected_utility(weights, [float(frame.mu[o]) for o in a]) for a in acts
    ]
    eu_rel = PreferenceRelation(frame, acts, tuple(_dense_float_ranks(numeric)))
    sugeno_rel = PreferenceRelation.from_utilities(frame, acts, sugeno)
    rows = [
        {
            "act": doc.act_label(a),
            "sugeno": sugeno[i],
            "expected": round(numeric[i], 9),
        }
        for i, a in enumerate(acts)
    ]
    verdicts = {}
    for name, rel in (("sugeno", sugeno_rel), ("expected", eu_rel)):
        for axiom in (Axiom.RCD, Axiom.RDD):
            verdict = check_axiom(rel, axiom)
            entry = {"holds": verdict.holds}
            if verdict.witness is not None:
                entry["witness"] = _witness_data(doc, verdict.witness)
            verdicts[f"{name}_{axiom.name.lower()}"] = entry
    divergence = any(
        not verdicts[f"expected_{ax}"]["holds"] and verdicts[f"sugeno_{ax}"]["holds"]
        for ax in ("rcd", "rdd")
    )
    if args.json:
        _emit_json(
            {
                "command": "compare",
                "probabilities": weights,
                "results": rows,
                "verdicts": verdicts,
                "divergence": divergence,
            }
        )
    else:
        for row in rows:
            print(
                f"{row['act']}: sugeno={row['sugeno']}"
                f" expected={row['expected']:g}"
            )
        for key, entry in verdicts.items():
            status = "holds" if entry["holds"] else "FAILS"
            print(f"{key}: {status}")
        print(f"divergence: {divergence}")
    return 1 if divergence else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qualdec",
        description="Ordinal decision utilities, axiom checking, and synthesis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate acts by Sugeno utility")
    p.add_argument("frame")
    p.add_argument("--act", help="act label or comma-joined outcome labels")
    p.add_argument("--all", action="store_true", help="evaluate every act")
    p.add_argument(
        "--method",
        choices=["levelcut", "outcome", "median", "all"],
        default="all",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check-capacity", help="validate and classify the capacity")
    p.add_argument("frame")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_capacity)

    p = sub.add_parser("check-axioms", help="check axioms on a relation")
    p.add_argument("relation")
    p.add_argument("--axioms", default="all", help="comma-separated names or 'all'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_axioms)

    p = sub.add_parser("synthesize", help="extract a representation")
    p.add_argument("relation")
    p.add_argument(
        "--mode",
        choices=["general", "optimistic", "pessimistic"],
        default="general",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("counterexample", help="search or replay counterexamples")
    p.add_argument("--kind", choices=["surething", "eu-rcd"], required=True)
    p.add_argument("frame", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("compare", help="Sugeno vs expected-utility rankings")
    p.add_argument("frame")
    p.add_argument(
        "--probabilities", required=True, help="comma-separated state weights"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compare)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except DocumentError as exc:
        return _error(str(exc))
    except CapacityError as exc:
        return _error(f"invalid capacity: {exc}")
    except BudgetExceededError as exc:
        return _error(str(exc))
    except RepresentationError as exc:
        print(f"BUG: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        return _error(str(exc))


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
