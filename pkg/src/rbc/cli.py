"""Command-line front end.

Exit codes: 0 success, 2 parse or validation problem, 3 verification
failure, 4 step limit hit, 5 state limit hit.  The RBC_MAX_WIDTH
environment variable overrides the truth-table width cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .diagram import Diagram, sort_key
from .errors import (
    RbcError,
    StateLimitExceeded,
    StepLimitExceeded,
    WidthMismatchError,
)
from .files import format_circuit, parse_circuit, parse_rules
from .measure import measure, verify_strict
from .moves import total_rank
from .rewriting import (
    Rule,
    all_normal_forms,
    builtin_rules,
    normalize,
    verify_trace,
)
from .semantics import bits_to_str, evaluate, truth_table

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_STEP_LIMIT = 4
EXIT_STATE_LIMIT = 5


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_PARSE


def _load_circuit(path: str) -> Diagram:
    return parse_circuit(Path(path).read_text())


def _load_rules(path: str | None) -> tuple[Rule, ...]:
    if path is None:
        return builtin_rules()
    return parse_rules(Path(path).read_text())


def _width_cap() -> int | None:
    raw = os.environ.get("RBC_MAX_WIDTH")
    if raw is None:
        return None
    return int(raw)


def cmd_check(args: argparse.Namespace) -> int:
    d = _load_circuit(args.file)
    print(f"ok: width={d.width} gates={len(d.gates)}")
    return EXIT_OK


def cmd_truth(args: argparse.Namespace) -> int:
    d = _load_circuit(args.file)
    for line in truth_table(d, max_width=_width_cap()).lines():
        print(line)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    d = _load_circuit(args.file)
    raw = args.input
    if not all(ch in "01" for ch in raw):
        return _fail(f'input "{raw}" is not a bit string')
    if len(raw) != d.width:
        raise WidthMismatchError(
            f"input has {len(raw)} bits, circuit has width {d.width}"
        )
    out = evaluate(d, tuple(int(ch) for ch in raw))
    print(f"{raw} -> {bits_to_str(out)}")
    return EXIT_OK


def cmd_measure(args: argparse.Namespace) -> int:
    d = _load_circuit(args.file)
    m = measure(d)
    for line in m.lines():
        print(line)
    print(f"rank {total_rank(m)}")
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace) -> int:
    d = _load_circuit(args.file)
    rules = _load_rules(args.rules)
    try:
        nf, trace = normalize(d, rules, max_steps=args.max_steps)
    except StepLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STEP_LIMIT
    if args.trace:
        for line in trace.lines():
            print(line)
    print(format_circuit(nf))
    rc = EXIT_OK
    if args.verify:
        report = verify_trace(trace)
        for line in report.lines():
            print(line)
        if not report.ok:
            rc = EXIT_VERIFY
    return rc


def cmd_nfs(args: argparse.Namespace) -> int:
    d = _load_circuit(args.file)
    rules = _load_rules(args.rules)
    try:
        forms = all_normal_forms(d, max_states=args.max_states, rules=rules)
    except StateLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STATE_LIMIT
    for i, nf in enumerate(sorted(forms, key=sort_key)):
        print(f"nf {i + 1}:")
        print(format_circuit(nf))
    print(f"count {len(forms)}")
    return EXIT_OK


def cmd_verify_rules(args: argparse.Namespace) -> int:
    rules = _load_rules(args.rules)
    report = verify_strict(rules)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.all_strict else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbc",
        description="Reversible boolean circuits: check, run, measure, normalize.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate a circuit file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("truth", help="print the circuit's truth table")
    p.add_argument("file")
    p.set_defaults(func=cmd_truth)

    p = sub.add_parser("eval", help="run the circuit on one input")
    p.add_argument("file")
    p.add_argument("--input", required=True, metavar="BITS")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("measure", help="print the circuit's word map and rank")
    p.add_argument("file")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("normalize", help="rewrite the circuit to a normal form")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="print each step")
    p.add_argument("--verify", action="store_true",
                   help="re-check every step (semantics and measure)")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--rules", default=None, metavar="FILE")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("nfs", help="enumerate all reachable normal forms")
    p.add_argument("file")
    p.add_argument("--max-states", type=int, default=10000)
    p.add_argument("--rules", default=None, metavar="FILE")
    p.set_defaults(func=cmd_nfs)

    p = sub.add_parser("verify-rules",
                       help="check that every rule strictly lowers the measure")
    p.add_argument("--rules", default=None, metavar="FILE")
    p.set_defaults(func=cmd_verify_rules)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as e:
        return _fail(f"cannot read {e.filename}")
    except RbcError as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
