"""Rewrite rules, matching up to gate reordering, and normalization.

A rule replaces one small circuit by another of the same width, same
boolean function, and strictly smaller measure.  Matching a pattern
inside a host circuit must see through reorderings of disjoint gates:
a match picks host gates realizing the pattern (shifted to a wire
window) such that no unmatched gate is forced to run between two
matched ones.  Under that convexity condition the matched gates can be
brought together, replaced, and the strict measure drop of the rule
carries over to the whole circuit, so repeated rewriting terminates.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field

from .diagram import (
    Diagram,
    Gate,
    canonicalize,
    dependency_closure,
    gates_overlap,
    not_,
    swap,
    t2,
    t3,
)
from .errors import (
    InvalidRuleError,
    NotDecreasingError,
    StaleMatchError,
    StateLimitExceeded,
    StepLimitExceeded,
    WidthMismatchError,
)
from .measure import measure
from .moves import Ordering, map_compare, total_rank
from .semantics import truth_table


@dataclass(frozen=True)
class Rule:
    """``lhs`` rewrites to ``rhs``; both sides share one width."""

    name: str
    lhs: Diagram
    rhs: Diagram

    def __post_init__(self) -> None:
        if self.lhs.width != self.rhs.width:
            raise WidthMismatchError(
                f"rule {self.name}: sides have widths "
                f"{self.lhs.width} and {self.rhs.width}"
            )
        self.lhs.validate()
        self.rhs.validate()

    @property
    def width(self) -> int:
        return self.lhs.width


def validate_rule(rule: Rule) -> None:
    """Check the semantic obligations: equal truth tables and a strict
    measure drop from lhs to rhs."""
    if truth_table(rule.lhs) != truth_table(rule.rhs):
        raise InvalidRuleError(
            f"rule {rule.name}: sides compute different boolean functions"
        )
    verdict = map_compare(measure(rule.lhs), measure(rule.rhs))
    if verdict is not Ordering.GREATER:
        raise NotDecreasingError(
            f"rule {rule.name}: replacement measure compares "
            f"{verdict.value}, expected a strict drop"
        )


def _rule(name: str, width: int, lhs: list[Gate], rhs: list[Gate]) -> Rule:
    return Rule(name, Diagram(width, tuple(lhs)), Diagram(width, tuple(rhs)))


@functools.lru_cache(maxsize=1)
def builtin_rules() -> tuple[Rule, ...]:
    """The full catalog, in match-priority order: cancellations first,
    then the swap identities, then sliding, then the swapped toffoli."""
    rules = (
        _rule("a_not", 1, [not_(0), not_(0)], []),
        _rule("a_t2", 2, [t2(0), t2(0)], []),
        _rule("a_t3", 3, [t3(0), t3(0)], []),
        _rule("p_swap2", 2, [swap(0), swap(0)], []),
        _rule(
            "p_yang_baxter",
            3,
            [swap(0), swap(1), swap(0)],
            [swap(1), swap(0), swap(1)],
        ),
        _rule("s_not_L", 2, [swap(0), not_(0)], [not_(1), swap(0)]),
        _rule("s_not_R", 2, [swap(0), not_(1)], [not_(0), swap(0)]),
        _rule(
            "s_t2_L",
            3,
            [swap(0), swap(1), t2(0)],
            [t2(1), swap(0), swap(1)],
        ),
        _rule(
            "s_t2_R",
            3,
            [swap(1), swap(0), t2(1)],
            [t2(0), swap(1), swap(0)],
        ),
        _rule(
            "s_t3_L",
            4,
            [swap(0), swap(1), swap(2), t3(0)],
            [t3(1), swap(0), swap(1), swap(2)],
        ),
        _rule(
            "s_t3_R",
            4,
            [swap(2), swap(1), swap(0), t3(1)],
            [t3(0), swap(2), swap(1), swap(0)],
        ),
        _rule("t_swapped_t3", 3, [swap(0), t3(0)], [t3(0), swap(0)]),
    )
    for r in rules:
        validate_rule(r)
    return rules


@dataclass(frozen=True)
class Match:
    """One way a rule's pattern occurs in a host circuit.

    ``offset`` is the wire the pattern window starts at; ``indices``
    are host gate positions, ascending, realizing the pattern gates.
    """

    rule: Rule
    offset: int
    indices: tuple[int, ...]

    @property
    def rule_name(self) -> str:
        return self.rule.name


@functools.lru_cache(maxsize=256)
def _pattern_orders(lhs: Diagram) -> tuple[tuple[Gate, ...], ...]:
    """Every gate order the pattern can appear in, deduplicated."""
    gates = lhs.gates
    n = len(gates)
    if n == 0:
        return ((),)
    preds = [0] * n
    for j in range(n):
        for i in range(j):
            if gates_overlap(gates[i], gates[j]):
                preds[j] |= 1 << i
    out: set[tuple[Gate, ...]] = set()
    acc: list[Gate] = []

    def rec(remaining: int) -> None:
        if remaining == 0:
            out.add(tuple(acc))
            return
        m = remaining
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            if preds[i] & remaining == 0:
                acc.append(gates[i])
                rec(remaining ^ (1 << i))
                acc.pop()

    rec((1 << n) - 1)
    return tuple(sorted(out, key=lambda t: [g.sort_key() for g in t]))


def _is_convex(reach: tuple[int, ...], smask: int, count: int) -> bool:
    desc = 0
    t = smask
    while t:
        low = t & -t
        desc |= reach[low.bit_length() - 1]
        t ^= low
    for u in range(count):
        if smask >> u & 1:
            continue
        if desc >> u & 1 and reach[u] & smask:
            return False
    return True


def find_matches(d: Diagram, rules: tuple[Rule, ...] | None = None) -> list[Match]:
    """All occurrences of the rules in d, deterministically ordered by
    (first matched gate, window offset, rule position in the catalog)."""
    if rules is None:
        rules = builtin_rules()
    gates = d.gates
    n = len(gates)
    reach = dependency_closure(d)
    by_key: dict[tuple, list[int]] = {}
    for i, g in enumerate(gates):
        by_key.setdefault((g.kind, g.offset), []).append(i)

    found: dict[tuple, Match] = {}
    for ri, rule in enumerate(rules):
        rw = rule.width
        if rw > d.width:
            continue
        for order in _pattern_orders(rule.lhs):
            if not order:
                continue
            first = order[0]
            for i0 in range(n):
                g0 = gates[i0]
                if g0.kind is not first.kind:
                    continue
                k = g0.offset - first.offset
                if k < 0 or k + rw > d.width:
                    continue

                chosen = [i0]

                def rec(slot: int) -> None:
                    if slot == len(order):
                        smask = 0
                        for i in chosen:
                            smask |= 1 << i
                        if _is_convex(reach, smask, n):
                            key = (ri, k, tuple(chosen))
                            if key not in found:
                                found[key] = Match(rule, k, tuple(chosen))
                        return
                    want = (order[slot].kind, order[slot].offset + k)
                    for i in by_key.get(want, ()):
                        if i > chosen[-1]:
                            chosen.append(i)
                            rec(slot + 1)
                            chosen.pop()

                rec(1)

    ms = list(found.values())
    ms.sort(key=lambda m: (m.indices[0], m.offset, _rule_pos(rules, m.rule), m.indices))
    return ms


def _rule_pos(rules: tuple[Rule, ...], rule: Rule) -> int:
    for i, r in enumerate(rules):
        if r is rule:
            return i
    return len(rules)


def _validate_match(d: Diagram, m: Match) -> tuple[int, ...]:
    gates = d.gates
    n = len(gates)
    idx = m.indices
    if len(idx) != len(m.rule.lhs.gates):
        raise StaleMatchError(f"match selects {len(idx)} gates, pattern has "
                              f"{len(m.rule.lhs.gates)}")
    if any(i < 0 or i >= n for i in idx) or list(idx) != sorted(set(idx)):
        raise StaleMatchError(f"gate indices {idx} not ascending within 0..{n - 1}")
    if m.offset < 0 or m.offset + m.rule.width > d.width:
        raise StaleMatchError(f"window at {m.offset} falls outside width {d.width}")
    picked = tuple(Gate(gates[i].kind, gates[i].offset - m.offset) for i in idx)
    if picked not in _pattern_orders(m.rule.lhs):
        raise StaleMatchError("selected gates no longer spell the pattern")
    reach = dependency_closure(d)
    smask = 0
    for i in idx:
        smask |= 1 << i
    if not _is_convex(reach, smask, n):
        raise StaleMatchError("an unmatched gate is pinned between matched gates")
    return reach


def apply_match(d: Diagram, m: Match) -> Diagram:
    """Replace the matched gates by the rule's replacement.

    Unmatched gates that must run before some matched gate stay in
    front of the replacement; everything else follows it.  The result
    is canonicalized.
    """
    reach = _validate_match(d, m)
    smask = 0
    for i in m.indices:
        smask |= 1 << i
    before: list[Gate] = []
    after: list[Gate] = []
    for i, g in enumerate(d.gates):
        if smask >> i & 1:
            continue
        if reach[i] & smask:
            before.append(g)
        else:
            after.append(g)
    middle = [g.shifted(m.offset) for g in m.rule.rhs.gates]
    return canonicalize(Diagram(d.width, tuple(before + middle + after)))


@dataclass(frozen=True)
class ReductionStep:
    match: Match
    before: Diagram
    after: Diagram

    @property
    def rule_name(self) -> str:
        return self.match.rule.name


@dataclass(frozen=True)
class ReductionTrace:
    initial: Diagram
    steps: tuple[ReductionStep, ...] = field(default=())

    def __post_init__(self) -> None:
        prev = self.initial
        for i, s in enumerate(self.steps):
            if s.before != prev:
                raise ValueError(f"trace breaks at step {i}: steps do not chain")
            prev = s.after

    @property
    def final(self) -> Diagram:
        return self.steps[-1].after if self.steps else self.initial

    def lines(self) -> list[str]:
        out = []
        for i, s in enumerate(self.steps):
            rb = total_rank(measure(s.before))
            ra = total_rank(measure(s.after))
            idx = ",".join(str(j) for j in s.match.indices)
            out.append(
                f"step {i + 1}: {s.rule_name} @ wires[{s.match.offset}] "
                f"gates[{idx}] rank {rb} -> {ra}"
            )
        return out


def default_step_cap(d: Diagram) -> int:
    return 10 * max(1, len(d.gates)) * max(1, total_rank(measure(d)))


def normalize(
    d: Diagram,
    rules: tuple[Rule, ...] | None = None,
    max_steps: int | None = None,
) -> tuple[Diagram, ReductionTrace]:
    """Apply the first available match until none remains.

    Termination is guaranteed by the strict measure drop of every rule;
    the step cap only guards against implementation bugs.
    """
    if rules is None:
        rules = builtin_rules()
    current = canonicalize(d)
    initial = current
    cap = default_step_cap(current) if max_steps is None else max_steps
    steps: list[ReductionStep] = []
    while True:
        ms = find_matches(current, rules)
        if not ms:
            break
        if len(steps) >= cap:
            raise StepLimitExceeded(f"no normal form within {cap} steps")
        nxt = apply_match(current, ms[0])
        steps.append(ReductionStep(ms[0], current, nxt))
        current = nxt
    return current, ReductionTrace(initial, tuple(steps))


def all_normal_forms(
    d: Diagram,
    max_states: int = 10000,
    rules: tuple[Rule, ...] | None = None,
) -> set[Diagram]:
    """Every normal form reachable from d, by exhaustive search over
    canonical circuits."""
    if rules is None:
        rules = builtin_rules()
    start = canonicalize(d)
    seen = {start}
    queue = deque([start])
    normal: set[Diagram] = set()
    while queue:
        cur = queue.popleft()
        ms = find_matches(cur, rules)
        if not ms:
            normal.add(cur)
            continue
        for m in ms:
            nxt = apply_match(cur, m)
            if nxt not in seen:
                if len(seen) >= max_states:
                    raise StateLimitExceeded(
                        f"more than {max_states} circuits reached"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return normal


@dataclass(frozen=True)
class StepCheck:
    rule_name: str
    semantics_ok: bool
    measure_verdict: Ordering
    rank_before: int
    rank_after: int

    @property
    def ok(self) -> bool:
        return (
            self.semantics_ok
            and self.measure_verdict is Ordering.LESS
            and self.rank_after < self.rank_before
        )


@dataclass(frozen=True)
class TraceReport:
    checks: tuple[StepCheck, ...]
    ranks: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for i, c in enumerate(self.checks):
            sem = "ok" if c.semantics_ok else "FAIL"
            mea = "ok" if c.measure_verdict is Ordering.LESS else "FAIL"
            out.append(
                f"verify step {i + 1}: {c.rule_name} semantics={sem} "
                f"measure={mea} rank {c.rank_before} -> {c.rank_after}"
            )
        out.append("ranks: " + " -> ".join(str(r) for r in self.ranks))
        out.append("verify: " + ("PASS" if self.ok else "FAIL"))
        return out


def verify_trace(trace: ReductionTrace) -> TraceReport:
    """Independently re-check a reduction: boolean function preserved
    and measure strictly dropped at every step."""
    checks = []
    ranks = [total_rank(measure(trace.initial))]
    for s in trace.steps:
        sem_ok = truth_table(s.before) == truth_table(s.after)
        mb = measure(s.before)
        ma = measure(s.after)
        verdict = map_compare(ma, mb)
        rb, ra = total_rank(mb), total_rank(ma)
        ranks.append(ra)
        checks.append(StepCheck(s.rule_name, sem_ok, verdict, rb, ra))
    return TraceReport(tuple(checks), tuple(ranks))
