"""Canonical labelled interval posets with event order and interfaces.

An :class:`Ipomset` is always stored in canonical form: events are numbered by
the step of the unique sparse step decomposition that introduces them (source
events first), ties broken by event order, and the event order keeps only the
transitive closure of its essential pairs (pairs unrelated by precedence).
Two iposets are isomorphic iff their canonical forms are equal, so ``==`` is
the isomorphism test and ipomsets can be used as dictionary keys.
"""

import logging
from collections.abc import Iterable
from typing import Literal, NamedTuple

from pydantic import BaseModel, ConfigDict

from errors import AxiomViolation

logger = logging.getLogger(__name__)

Loset = tuple[str, ...]
Pair = tuple[int, int]


class Ipomset(BaseModel):
    model_config = ConfigDict(frozen=True)

    labels: tuple[str, ...] = ()
    source: frozenset[int] = frozenset()
    target: frozenset[int] = frozenset()
    prec: frozenset[Pair] = frozenset()
    evord: frozenset[Pair] = frozenset()

    @property
    def n(self) -> int:
        return len(self.labels)

    def precedes(self, x: int, y: int) -> bool:
        return (x, y) in self.prec

    def concurrent(self, x: int, y: int) -> bool:
        return x != y and (x, y) not in self.prec and (y, x) not in self.prec

    def loset_order(self, events: Iterable[int]) -> list[int]:
        """Sort pairwise concurrent events by event order."""
        return order_by_evord(events, self.evord)

    @property
    def source_loset(self) -> Loset:
        return tuple(self.labels[x] for x in self.loset_order(self.source))

    @property
    def target_loset(self) -> Loset:
        return tuple(self.labels[x] for x in self.loset_order(self.target))

    @property
    def is_empty(self) -> bool:
        return not self.labels

    @property
    def is_discrete(self) -> bool:
        return not self.prec

    def sort_key(self) -> tuple:
        return (
            self.n,
            self.labels,
            tuple(sorted(self.source)),
            tuple(sorted(self.target)),
            tuple(sorted(self.prec)),
            tuple(sorted(self.evord)),
        )

    def __lt__(self, other: "Ipomset") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        from ipomsets.formats import render

        return render(self)

    def __repr__(self) -> str:
        return f"Ipomset({str(self)!r})"


EMPTY = Ipomset()


class ExecutionStep(NamedTuple):
    """One starter or terminator of a sparse execution, on raw event indices."""

    kind: Literal["starter", "terminator"]
    loset: tuple[int, ...]
    active: frozenset[int]


def transitive_closure(n: int, pairs: Iterable[Pair]) -> frozenset[Pair]:
    succ: list[set[int]] = [set() for _ in range(n)]
    for x, y in pairs:
        succ[x].add(y)
    for k in range(n):
        for i in range(n):
            if k in succ[i]:
                succ[i] |= succ[k]
    return frozenset((i, j) for i in range(n) for j in succ[i])


def order_by_evord(events: Iterable[int], evord: frozenset[Pair]) -> list[int]:
    events = list(events)
    rank = {x: sum((y, x) in evord for y in events) for x in events}
    ordered = sorted(events, key=rank.__getitem__)
    for x, y in zip(ordered, ordered[1:]):
        if (x, y) not in evord:
            raise AxiomViolation("event order is not total on a loset", (x, y))
    return ordered


def sparse_execution(
    n: int,
    source: frozenset[int],
    target: frozenset[int],
    prec: frozenset[Pair],
    evord: frozenset[Pair],
) -> tuple[tuple[int, ...], list[ExecutionStep]]:
    """Greedy alternating execution: start everything startable, then
    terminate everything terminable. Its steps are the unique sparse step
    decomposition of a valid iposet."""
    preds: list[set[int]] = [set() for _ in range(n)]
    succs: list[set[int]] = [set() for _ in range(n)]
    for x, y in prec:
        preds[y].add(x)
        succs[x].add(y)

    initial = tuple(order_by_evord(source, evord))
    started = set(source)
    active = set(source)
    done: set[int] = set()
    steps: list[ExecutionStep] = []
    while True:
        startable = frozenset(y for y in range(n) if y not in started and preds[y] <= done)
        if startable:
            started |= startable
            active |= startable
            steps.append(ExecutionStep("starter", tuple(order_by_evord(active, evord)), startable))
            continue
        unstarted = set(range(n)) - started
        terminable = frozenset(x for x in active if x not in target and unstarted <= succs[x])
        if terminable:
            steps.append(ExecutionStep("terminator", tuple(order_by_evord(active, evord)), terminable))
            active -= terminable
            done |= terminable
            continue
        break
    if len(started) != n or active != set(target):
        raise AxiomViolation("iposet admits no step decomposition")
    return initial, steps


def _check_axioms(
    n: int,
    source: frozenset[int],
    target: frozenset[int],
    prec: frozenset[Pair],
    evord: frozenset[Pair],
) -> None:
    for x, y in prec:
        if x == y:
            raise AxiomViolation("precedence is cyclic", x)
    for x, y in evord:
        if x == y:
            raise AxiomViolation("event order is cyclic", x)
    for x in range(n):
        for y in range(x + 1, n):
            if not ((x, y) in prec or (y, x) in prec or (x, y) in evord or (y, x) in evord):
                raise AxiomViolation("events are unrelated by precedence and event order", (x, y))
    for x, y in prec:
        if y in source:
            raise AxiomViolation("source event is not minimal", y)
        if x in target:
            raise AxiomViolation("target event is not maximal", x)
    for a, b in prec:
        for c, d in prec:
            if (a, d) not in prec and (c, b) not in prec:
                raise AxiomViolation("precedence is not an interval order (2+2)", (a, b, c, d))


def normalize(
    labels: Iterable[str],
    source: Iterable[int] = (),
    target: Iterable[int] = (),
    prec: Iterable[Pair] = (),
    evord: Iterable[Pair] = (),
) -> Ipomset:
    """Validate an iposet on events ``0..n-1`` and return its canonical form.

    Precedence and event order may be given as generating pairs; both are
    closed transitively before the axioms are checked.
    """
    labels = tuple(labels)
    n = len(labels)
    source = frozenset(source)
    target = frozenset(target)
    raw_prec = list(prec)
    raw_evord = list(evord)
    for x in (*source, *target, *(e for pair in raw_prec + raw_evord for e in pair)):
        if not 0 <= x < n:
            raise AxiomViolation("event index out of range", x)

    prec_c = transitive_closure(n, raw_prec)
    evord_c = transitive_closure(n, raw_evord)
    _check_axioms(n, source, target, prec_c, evord_c)

    initial, steps = sparse_execution(n, source, target, prec_c, evord_c)
    rank: dict[int, tuple[int, int]] = {x: (0, r) for r, x in enumerate(initial)}
    for k, step in enumerate(steps, 1):
        if step.kind == "starter":
            introduced = [x for x in step.loset if x in step.active]
            rank.update((x, (k, r)) for r, x in enumerate(introduced))
    old_order = sorted(range(n), key=rank.__getitem__)
    new = {old: i for i, old in enumerate(old_order)}

    new_prec = frozenset((new[x], new[y]) for x, y in prec_c)
    essential = [
        (new[x], new[y]) for x, y in evord_c if (x, y) not in prec_c and (y, x) not in prec_c
    ]
    return Ipomset.model_construct(
        labels=tuple(labels[old] for old in old_order),
        source=frozenset(new[x] for x in source),
        target=frozenset(new[x] for x in target),
        prec=new_prec,
        evord=transitive_closure(n, essential),
    )


def restrict(P: Ipomset, events: Iterable[int], source: Iterable[int], target: Iterable[int]) -> Ipomset:
    """Canonical sub-iposet of ``P`` on ``events`` with the given interfaces."""
    kept = sorted(events)
    new = {old: i for i, old in enumerate(kept)}
    return normalize(
        (P.labels[x] for x in kept),
        (new[x] for x in source),
        (new[x] for x in target),
        ((new[x], new[y]) for x, y in P.prec if x in new and y in new),
        ((new[x], new[y]) for x, y in P.evord if x in new and y in new),
    )
