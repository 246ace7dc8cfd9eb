"""Reversible boolean circuits as positioned gate lists.

A circuit is a number of wires plus an ordered list of gates, each gate
occupying a contiguous window of wires.  Two gate lists denote the same
circuit when one can be turned into the other by repeatedly swapping
adjacent gates whose windows are disjoint; ``canonicalize`` picks a
unique representative of that class (greedy earliest-layer form) and
``equivalent`` decides the relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import OutOfRangeError, WidthMismatchError


class GateKind(Enum):
    SWAP = "swap"
    NOT = "not"
    T2 = "t2"
    T3 = "t3"

    @property
    def arity(self) -> int:
        return _ARITY[self]


_ARITY = {GateKind.SWAP: 2, GateKind.NOT: 1, GateKind.T2: 2, GateKind.T3: 3}

# Stable ordering used when sorting gates and diagrams deterministically.
KIND_ORDER = {kind: i for i, kind in enumerate(GateKind)}


@dataclass(frozen=True)
class Gate:
    """A gate kind placed at a wire offset; occupies wires [offset, offset + arity)."""

    kind: GateKind
    offset: int

    @property
    def arity(self) -> int:
        return self.kind.arity

    @property
    def support(self) -> range:
        return range(self.offset, self.offset + self.kind.arity)

    def shifted(self, delta: int) -> "Gate":
        return Gate(self.kind, self.offset + delta)

    def sort_key(self) -> tuple[int, int]:
        return (KIND_ORDER[self.kind], self.offset)


def swap(offset: int) -> Gate:
    return Gate(GateKind.SWAP, offset)


def not_(offset: int) -> Gate:
    return Gate(GateKind.NOT, offset)


def t2(offset: int) -> Gate:
    return Gate(GateKind.T2, offset)


def t3(offset: int) -> Gate:
    return Gate(GateKind.T3, offset)


def gates_overlap(a: Gate, b: Gate) -> bool:
    return a.offset < b.offset + b.arity and b.offset < a.offset + a.arity


def commute(a: Gate, b: Gate) -> bool:
    """Gates with disjoint wire windows may be reordered freely."""
    return not gates_overlap(a, b)


@dataclass(frozen=True)
class Diagram:
    """A circuit: ``width`` wires and an ordered gate list."""

    width: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.gates, tuple):
            object.__setattr__(self, "gates", tuple(self.gates))

    def validate(self) -> None:
        """Raise OutOfRangeError at the first gate not fitting inside the width."""
        if self.width < 0:
            raise OutOfRangeError(-1, f"negative width {self.width}")
        for i, g in enumerate(self.gates):
            if g.offset < 0 or g.offset + g.arity > self.width:
                raise OutOfRangeError(
                    i,
                    f"gate {i} ({g.kind.value} at {g.offset}) spans wires "
                    f"{g.offset}..{g.offset + g.arity - 1} outside width {self.width}",
                )

    def is_valid(self) -> bool:
        try:
            self.validate()
        except OutOfRangeError:
            return False
        return True

    @property
    def is_identity(self) -> bool:
        return not self.gates

    def __rshift__(self, other: "Diagram") -> "Diagram":
        return compose_seq(self, other)

    def __matmul__(self, other: "Diagram") -> "Diagram":
        return compose_par(self, other)


def identity(width: int) -> Diagram:
    return Diagram(width, ())


def compose_seq(d1: Diagram, d2: Diagram) -> Diagram:
    """Run d1 first, then d2.  Widths must agree."""
    if d1.width != d2.width:
        raise WidthMismatchError(
            f"cannot chain width {d1.width} into width {d2.width}"
        )
    return Diagram(d1.width, d1.gates + d2.gates)


def compose_par(d1: Diagram, d2: Diagram) -> Diagram:
    """Stack d2 below d1; d2's gates are shifted down by d1's width."""
    shifted = tuple(g.shifted(d1.width) for g in d2.gates)
    return Diagram(d1.width + d2.width, d1.gates + shifted)


# A layer is a group of gates with pairwise disjoint windows, kept
# sorted by offset.
Layer = tuple[Gate, ...]


def layers(d: Diagram) -> tuple[Layer, ...]:
    """Greedy earliest-layer decomposition of the gate list.

    Each gate lands in the first layer after every earlier gate whose
    window overlaps its own, so gates within one layer never overlap.
    """
    level: list[int] = []
    for i, g in enumerate(d.gates):
        depth = -1
        for j in range(i):
            if level[j] > depth and gates_overlap(d.gates[j], g):
                depth = level[j]
        level.append(depth + 1)
    n_layers = max(level, default=-1) + 1
    buckets: list[list[Gate]] = [[] for _ in range(n_layers)]
    for g, lv in zip(d.gates, level):
        buckets[lv].append(g)
    return tuple(tuple(sorted(b, key=lambda g: g.offset)) for b in buckets)


def canonicalize(d: Diagram) -> Diagram:
    """Unique representative of d's reordering class: layers, flattened."""
    flat = tuple(g for layer in layers(d) for g in layer)
    return Diagram(d.width, flat)


def equivalent(d1: Diagram, d2: Diagram) -> bool:
    """True when the two circuits differ only by reordering disjoint gates."""
    if d1.width != d2.width:
        return False
    return canonicalize(d1).gates == canonicalize(d2).gates


def dependency_edges(d: Diagram) -> tuple[tuple[int, int], ...]:
    """Immediate before/after constraints between gate indices.

    There is an edge i -> j when gate i precedes gate j in the list,
    their windows overlap, and no gate between them overlaps both
    (such an intermediate would already force the ordering).
    Reachability along edges is exactly "i runs before j in every
    reordering of the list".
    """
    gs = d.gates
    edges = []
    for j in range(len(gs)):
        for i in range(j):
            if not gates_overlap(gs[i], gs[j]):
                continue
            separated = any(
                gates_overlap(gs[i], gs[k]) and gates_overlap(gs[k], gs[j])
                for k in range(i + 1, j)
            )
            if not separated:
                edges.append((i, j))
    return tuple(edges)


def dependency_closure(d: Diagram) -> tuple[int, ...]:
    """Per gate index i, a bitmask of all indices that must run after i."""
    gs = d.gates
    n = len(gs)
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        acc = 0
        for j in range(i + 1, n):
            if gates_overlap(gs[i], gs[j]):
                acc |= (1 << j) | reach[j]
        reach[i] = acc
    return tuple(reach)


def sort_key(d: Diagram) -> tuple:
    """Deterministic ordering key for sets of diagrams."""
    return (d.width, len(d.gates), tuple(g.sort_key() for g in d.gates))


def from_gates(width: int, gates: Iterable[Gate] | Sequence[Gate]) -> Diagram:
    d = Diagram(width, tuple(gates))
    d.validate()
    return d
