"""Brute-force reference implementations used only to check the fast paths.

These deliberately avoid the algorithms under test: reorderings are
enumerated by explicit adjacent transpositions, routing is tracked by
simulating swaps, and map comparison is evaluated pointwise on a finite
word sample.
"""

from __future__ import annotations

from rbc.diagram import Diagram, Gate, GateKind, commute
from rbc.moves import MoveMap, map_apply, word_le, word_key
from rbc.rewriting import Rule


def all_index_orders(d: Diagram) -> set[tuple[int, ...]]:
    """Every gate order reachable by swapping adjacent disjoint gates,
    as tuples of original gate indices."""
    start = tuple(range(len(d.gates)))
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for i in range(len(cur) - 1):
            if commute(d.gates[cur[i]], d.gates[cur[i + 1]]):
                nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def all_gate_orders(d: Diagram) -> set[tuple[Gate, ...]]:
    return {tuple(d.gates[i] for i in order) for order in all_index_orders(d)}


def oracle_equivalent(d1: Diagram, d2: Diagram) -> bool:
    if d1.width != d2.width:
        return False
    return tuple(d2.gates) in all_gate_orders(d1)


def oracle_must_precede(d: Diagram, i: int, j: int) -> bool:
    """True when gate i comes before gate j in every reachable order."""
    for order in all_index_orders(d):
        if order.index(i) > order.index(j):
            return False
    return True


def oracle_matches(d: Diagram, rules) -> set[tuple[str, int, frozenset[int]]]:
    """Scan every reachable gate order for each pattern as a contiguous,
    window-aligned run of gates."""
    found = set()
    orders = all_index_orders(d)
    for rule in rules:
        m = len(rule.lhs.gates)
        rw = rule.lhs.width
        if m == 0 or rw > d.width:
            continue
        for order in orders:
            gates = [d.gates[i] for i in order]
            for k in range(d.width - rw + 1):
                for start in range(len(gates) - m + 1):
                    run = gates[start:start + m]
                    if not all(
                        g.offset >= k and g.offset + g.arity <= k + rw
                        for g in run
                    ):
                        continue
                    sub = Diagram(rw, tuple(Gate(g.kind, g.offset - k) for g in run))
                    if oracle_equivalent(sub, rule.lhs):
                        found.add((rule.name, k, frozenset(order[start:start + m])))
    return found


def oracle_src_permutation(d: Diagram) -> tuple[int, ...]:
    """Wire routing computed by simulating swaps only: entry i of the
    result is the input wire that ends up at output i."""
    at = list(range(d.width))
    for g in d.gates:
        if g.kind is GateKind.SWAP:
            at[g.offset], at[g.offset + 1] = at[g.offset + 1], at[g.offset]
    return tuple(at)


def _words_upto(max_len: int) -> list[str]:
    words = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + ch for w in frontier for ch in "lrt"]
        words.extend(frontier)
    return words


def oracle_map_less(f: MoveMap, g: MoveMap, sample_len: int = 2) -> bool:
    """Pointwise comparison over every input vector built from words of
    length <= sample_len, plus equal routing."""
    if f.n != g.n or f.src != g.src:
        return False
    import itertools

    words = _words_upto(sample_len)
    for xs in itertools.product(words, repeat=f.n):
        fx, gx = map_apply(f, xs), map_apply(g, xs)
        if not all(word_le(a, b) for a, b in zip(fx, gx)):
            return False
        if not any(word_key(a) < word_key(b) for a, b in zip(fx, gx)):
            return False
    return True
