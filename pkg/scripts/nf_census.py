"""How often does reduction order matter?

Samples random circuits, enumerates every reachable normal form by
breadth-first search, and reports the distribution of normal-form
counts.  Circuits with two or more distinct normal forms witness the
non-confluence of the rule system; the smallest ones found are printed.

Usage:
    python scripts/nf_census.py --count 300 --seed 11 --max-gates 8
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter

from rbc.diagram import sort_key
from rbc.errors import StateLimitExceeded
from rbc.files import format_circuit
from rbc.rewriting import all_normal_forms
from rbc.sampling import random_diagram, shuffle_equivalent
from rbc.semantics import truth_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-width", type=int, default=5)
    ap.add_argument("--max-gates", type=int, default=10)
    ap.add_argument("--max-states", type=int, default=20000)
    ap.add_argument("--show", type=int, default=3,
                    help="how many non-confluent examples to print")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    histogram: Counter[int] = Counter()
    skipped = 0
    branching: list = []  # (gates, circuit, nf count)
    t0 = time.perf_counter()

    for _ in range(args.count):
        d = random_diagram(rng, max_width=args.max_width, max_gates=args.max_gates)
        try:
            forms = all_normal_forms(d, max_states=args.max_states)
        except StateLimitExceeded:
            skipped += 1
            continue
        histogram[len(forms)] += 1
        if len(forms) > 1:
            assert len({truth_table(f) for f in forms}) == 1
            # the census must not depend on how the gate list is written
            assert all_normal_forms(shuffle_equivalent(rng, d),
                                    max_states=args.max_states) == forms
            branching.append((len(d.gates), d, len(forms)))

    dt = time.perf_counter() - t0
    print(f"samples   {args.count}  (seed {args.seed}, "
          f"width<={args.max_width}, gates<={args.max_gates})")
    print(f"wall time {dt:.2f} s")
    if skipped:
        print(f"skipped   {skipped} (state limit {args.max_states})")
    print("normal forms per circuit:")
    for k in sorted(histogram):
        print(f"  {k}: {histogram[k]}")
    confluent = histogram.get(1, 0)
    total = sum(histogram.values())
    if total:
        print(f"single-NF fraction: {confluent / total:.3f}")
    branching.sort(key=lambda t: (t[0], sort_key(t[1])))
    for gates, d, n in branching[: args.show]:
        print(f"\n{n} normal forms from ({gates} gates):")
        print(format_circuit(d))


if __name__ == "__main__":
    main()
