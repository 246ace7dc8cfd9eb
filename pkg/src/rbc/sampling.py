"""Seeded random circuit generation for stress suites and scripts."""

from __future__ import annotations

import random

from .diagram import Diagram, Gate, GateKind


def random_diagram(
    rng: random.Random,
    max_width: int = 6,
    max_gates: int = 25,
    min_width: int = 0,
    width: int | None = None,
) -> Diagram:
    if width is None:
        width = rng.randint(min_width, max_width)
    kinds = [k for k in GateKind if k.arity <= width]
    if not kinds:
        return Diagram(width, ())
    count = rng.randint(0, max_gates)
    gates = []
    for _ in range(count):
        kind = rng.choice(kinds)
        gates.append(Gate(kind, rng.randint(0, width - kind.arity)))
    return Diagram(width, tuple(gates))


def shuffle_equivalent(rng: random.Random, d: Diagram, moves: int = 30) -> Diagram:
    """A different gate list for the same circuit: random adjacent
    transpositions of disjoint gates."""
    gates = list(d.gates)
    for _ in range(moves):
        if len(gates) < 2:
            break
        i = rng.randrange(len(gates) - 1)
        a, b = gates[i], gates[i + 1]
        if a.offset + a.arity <= b.offset or b.offset + b.arity <= a.offset:
            gates[i], gates[i + 1] = b, a
    return Diagram(d.width, tuple(gates))
