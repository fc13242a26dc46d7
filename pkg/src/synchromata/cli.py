"""Command-line front end.

Exit codes: 0 on success (and when every checked claim passes), 1 when a
claim or property check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import io
from .automaton import (
    Dfa,
    StateSet,
    is_strongly_connected,
    is_synchronizing,
)
from .extension import (
    PROFILE_BOUND,
    extension_profile,
    image_extension_bound,
    is_irreducibly_synchronizing,
    reachable_images,
    shortest_avoiding_word,
    shortest_extending_word,
)
from .families import FAMILIES, build_family
from .replication import all_passing, run_all
from .reset import inverse_layers, reset_length, shortest_reset_word


def _parse_subset(text: str, dfa: Dfa) -> StateSet:
    try:
        states = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"subset must be comma-separated state numbers, got {text!r}")
    return StateSet(states, dfa.n)


def _load(path: str) -> Dfa:
    try:
        return io.load_path(path)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}")


def cmd_gen(args) -> int:
    dfa = build_family(args.family, args.size)
    if args.format == "json":
        out = io.to_json(dfa)
    elif args.format == "text":
        out = io.to_text(dfa)
    else:
        out = io.to_dot(dfa)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_analyze(args) -> int:
    dfa = _load(args.automaton)
    print(f"states: {dfa.n}")
    print(f"alphabet: {dfa.letters}")
    print(f"strongly connected: {'yes' if is_strongly_connected(dfa) else 'no'}")
    sync = is_synchronizing(dfa)
    print(f"synchronizing: {'yes' if sync else 'no'}")
    if sync:
        length = reset_length(dfa, args.limit)
        word = shortest_reset_word(dfa)
        print(f"reset length: {length}")
        print(f"shortest reset word: {dfa.word_str(word)}")
        irr = is_irreducibly_synchronizing(dfa)
        print(f"irreducibly synchronizing: {'yes' if irr else 'no'}")
    return 0


def cmd_extend(args) -> int:
    dfa = _load(args.automaton)
    subset = _parse_subset(args.set, dfa)
    word = shortest_extending_word(dfa, subset)
    if word is None:
        print(f"subset {subset} is not extendable")
    else:
        print(f"shortest extending length: {len(word)}")
        print(f"word: {dfa.word_str(word)}")
    return 0


def cmd_profile(args) -> int:
    dfa = _load(args.automaton)
    report = extension_profile(dfa, bound=args.bound)
    for c, value in enumerate(report.per_cardinality_max, start=1):
        shown = "unbounded" if value is None else value
        print(f"cardinality {c}: {shown}")
    if report.max_length is None:
        print(f"profile: unbounded (subset {report.witness_set} is not extendable)")
    else:
        print(f"profile: {report.max_length}")
        print(f"witness subset: {report.witness_set}")
        print(f"witness word: {dfa.word_str(report.witness_word)}")
    return 0


def cmd_avoid(args) -> int:
    dfa = _load(args.automaton)
    word = shortest_avoiding_word(dfa, args.state)
    if word is None:
        print(f"state q{args.state} cannot be avoided")
    else:
        print(f"shortest avoiding length: {len(word)}")
        print(f"word: {dfa.word_str(word)}")
    return 0


def cmd_images(args) -> int:
    dfa = _load(args.automaton)
    images = reachable_images(dfa)
    print(f"reachable images: {len(images)}")
    if args.list:
        for s in images:
            print(f"  {s}")
    return 0


def cmd_conjecture(args) -> int:
    dfa = _load(args.automaton)
    report = image_extension_bound(dfa, bound=args.bound)
    print(f"reachable images: {report.reachable_image_count}")
    print(f"worst length: {report.worst_length}")
    print(f"worst image: {report.worst_set}")
    print(f"constant witness: {report.constant_witness} "
          f"(~{float(report.constant_witness):.3f})")
    return 0


def cmd_layers(args) -> int:
    dfa = _load(args.automaton)
    trace = inverse_layers(dfa, args.limit)
    if args.trace:
        for i, layer in enumerate(trace.layers):
            sets = " ".join(str(s) for s in layer)
            print(f"L_{i}: {sets if sets else '(empty)'}")
    if trace.found_at is not None:
        print(f"full set reached at layer {trace.found_at}")
    elif trace.truncated:
        print("limit reached before the full set appeared")
    else:
        print("layers died out; the automaton is not synchronizing")
    return 0


def cmd_verify_paper(args) -> int:
    results = run_all(max_m=args.max_m, max_n=args.max_n)
    for r in results:
        expected = r.expected if isinstance(r.expected, int) else list(r.expected)
        line = (f"{r.status.upper():8s} {r.claim_id}({r.parameter}): "
                f"computed={r.computed} expected={expected}")
        print(line)
    ok = all_passing(results)
    print(f"{sum(r.ok for r in results)}/{len(results)} claims passed")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in results], fh, indent=2)
            fh.write("\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synchromata",
        description="Exact synchronization analysis of deterministic automata",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named automaton family member")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--size", required=True, type=int,
                   help="family parameter (m for the 2m-state families, n otherwise)")
    p.add_argument("--format", choices=["json", "text", "dot"], default="json")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="connectivity, synchronization, reset length")
    p.add_argument("automaton", help="automaton file (JSON or text)")
    p.add_argument("--limit", type=int, default=None,
                   help="override the layer-search iteration limit")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extend", help="shortest extending word for a subset")
    p.add_argument("automaton")
    p.add_argument("--set", required=True,
                   help="comma-separated 1-based state numbers, e.g. 6,7,8,9")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("profile", help="extension profile over all subsets")
    p.add_argument("automaton")
    p.add_argument("--bound", type=int, default=PROFILE_BOUND,
                   help="largest state count to attempt (whole-lattice search)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("avoid", help="shortest word keeping a state out of the image")
    p.add_argument("automaton")
    p.add_argument("--state", required=True, type=int)
    p.set_defaults(func=cmd_avoid)

    p = sub.add_parser("images", help="subsets reachable as images of the full set")
    p.add_argument("automaton")
    p.add_argument("--list", action="store_true", help="print every image")
    p.set_defaults(func=cmd_images)

    p = sub.add_parser("conjecture", help="image-aware extension bound report")
    p.add_argument("automaton")
    p.add_argument("--bound", type=int, default=PROFILE_BOUND,
                   help="largest state count to attempt (whole-lattice search)")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("layers", help="inverse layer search for the reset length")
    p.add_argument("automaton")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--trace", action="store_true", help="dump every layer")
    p.set_defaults(func=cmd_layers)

    p = sub.add_parser("verify-paper", help="run the full replication claim suite")
    p.add_argument("--max-m", type=int, default=8,
                   help="cap for the two-letter family parameter")
    p.add_argument("--max-n", type=int, default=10,
                   help="cap for the ternary series size")
    p.add_argument("--json", help="also write the report as JSON to this path")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
