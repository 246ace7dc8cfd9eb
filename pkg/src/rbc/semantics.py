"""Boolean meaning of circuits: bit-vector evaluation and truth tables.

Wire 0 is the most significant bit when inputs are read off as binary
strings, so truth-table rows run through inputs 00..0, 00..1, ... in
ascending numeric order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .diagram import Diagram, GateKind
from .errors import ArityMismatchError, WidthMismatchError, WidthTooLargeError

BitVec = tuple[int, ...]

# Widest circuit whose 2**n-row table we will enumerate by default.
DEFAULT_WIDTH_CAP = 12


def apply_gate(kind: GateKind, window: Sequence[int]) -> BitVec:
    """One gate acting on exactly its window of bits."""
    if len(window) != kind.arity:
        raise ArityMismatchError(
            f"{kind.value} takes {kind.arity} bits, got {len(window)}"
        )
    if kind is GateKind.SWAP:
        x, y = window
        return (y, x)
    if kind is GateKind.NOT:
        (x,) = window
        return (1 - x,)
    if kind is GateKind.T2:
        x, c = window
        return (x, c ^ x)
    x, y, c = window
    return (x, y, c ^ (x & y))


def evaluate(d: Diagram, bits: Sequence[int]) -> BitVec:
    if len(bits) != d.width:
        raise WidthMismatchError(
            f"input has {len(bits)} bits, circuit has width {d.width}"
        )
    state = list(bits)
    for g in d.gates:
        lo, hi = g.offset, g.offset + g.arity
        state[lo:hi] = apply_gate(g.kind, state[lo:hi])
    return tuple(state)


def index_to_bits(index: int, width: int) -> BitVec:
    return tuple((index >> (width - 1 - j)) & 1 for j in range(width))


def bits_to_str(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


@dataclass(frozen=True)
class TruthTable:
    width: int
    rows: tuple[BitVec, ...]

    def lines(self) -> list[str]:
        out = []
        for i, row in enumerate(self.rows):
            out.append(f"{bits_to_str(index_to_bits(i, self.width))} -> {bits_to_str(row)}")
        return out


def truth_table(d: Diagram, max_width: int | None = None) -> TruthTable:
    cap = DEFAULT_WIDTH_CAP if max_width is None else max_width
    if d.width > cap:
        raise WidthTooLargeError(
            f"width {d.width} exceeds truth-table cap {cap}"
        )
    rows = tuple(
        evaluate(d, bits) for bits in itertools.product((0, 1), repeat=d.width)
    )
    return TruthTable(d.width, rows)


def identity_table(width: int) -> TruthTable:
    rows = tuple(itertools.product((0, 1), repeat=width))
    return TruthTable(width, rows)


def is_permutation(t: TruthTable) -> bool:
    return len(set(t.rows)) == len(t.rows)
