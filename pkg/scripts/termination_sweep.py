"""Normalize a batch of random circuits and check every trace.

Samples circuits, runs them to a normal form, re-verifies each step
(function preserved, measure strictly down), and prints summary
statistics: step counts, rank drops, gate-count shrinkage, and the
slowest reduction seen.

Usage:
    python scripts/termination_sweep.py --count 1000 --seed 7
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from rbc.moves import total_rank
from rbc.measure import measure
from rbc.files import format_circuit
from rbc.rewriting import normalize, verify_trace
from rbc.sampling import random_diagram
from rbc.semantics import truth_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-width", type=int, default=6)
    ap.add_argument("--max-gates", type=int, default=25)
    ap.add_argument("--skip-verify", action="store_true",
                    help="only normalize, skip the per-step re-check")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    steps_seen: list[int] = []
    drops: list[int] = []
    shrink: list[int] = []
    worst = None  # (steps, circuit text)
    t0 = time.perf_counter()

    for i in range(args.count):
        d = random_diagram(rng, max_width=args.max_width, max_gates=args.max_gates)
        nf, trace = normalize(d)
        if not args.skip_verify:
            report = verify_trace(trace)
            if not report.ok:
                raise SystemExit(
                    f"verification FAILED on sample {i}:\n{format_circuit(d)}"
                )
            if d.width <= 10 and truth_table(nf) != truth_table(d):
                raise SystemExit(f"function changed on sample {i}")
        n = len(trace.steps)
        steps_seen.append(n)
        drops.append(total_rank(measure(d)) - total_rank(measure(nf)))
        shrink.append(len(d.gates) - len(nf.gates))
        if worst is None or n > worst[0]:
            worst = (n, format_circuit(d))

    dt = time.perf_counter() - t0
    print(f"samples        {args.count}  (seed {args.seed}, "
          f"width<={args.max_width}, gates<={args.max_gates})")
    print(f"wall time      {dt:.2f} s")
    print(f"steps          mean {statistics.mean(steps_seen):.2f}  "
          f"max {max(steps_seen)}")
    print(f"rank drop      mean {statistics.mean(drops):.3g}  max {max(drops):.3g}")
    print(f"gates removed  mean {statistics.mean(shrink):.2f}  max {max(shrink)}")
    if not args.skip_verify:
        print("every trace re-verified: function preserved, measure strictly down")
    if worst and worst[0] > 0:
        print(f"\nlongest reduction ({worst[0]} steps) started from:")
        print(worst[1])


if __name__ == "__main__":
    main()
