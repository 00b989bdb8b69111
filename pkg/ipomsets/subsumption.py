"""Subsumption P ⊑ Q, isomorphism and downward closure."""

import logging
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict

from ipomsets.core import Ipomset, normalize

logger = logging.getLogger(__name__)


class SubsumptionVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    left: str
    right: str
    mapping: dict[int, int] | None = None


def _compatible(P: Ipomset, Q: Ipomset, x: int, y: int) -> bool:
    return (
        P.labels[x] == Q.labels[y]
        and (x in P.source) == (y in Q.source)
        and (x in P.target) == (y in Q.target)
    )


def find_subsumption(P: Ipomset, Q: Ipomset) -> dict[int, int] | None:
    """Return a bijection witnessing P ⊑ Q, or None.

    The bijection respects labels and interfaces, reflects precedence
    (f(x) <_Q f(y) implies x <_P y) and preserves the event order of pairs
    that are concurrent in ``P``.
    """
    if P.n != Q.n or sorted(P.labels) != sorted(Q.labels):
        return None
    if len(P.source) != len(Q.source) or len(P.target) != len(Q.target):
        return None

    candidates = [[y for y in range(Q.n) if _compatible(P, Q, x, y)] for x in range(P.n)]
    if any(not c for c in candidates):
        return None
    # Events with the fewest candidates first.
    order = sorted(range(P.n), key=lambda x: (len(candidates[x]), x))
    f: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x: int, y: int) -> bool:
        for x2, y2 in f.items():
            if (y, y2) in Q.prec and (x, x2) not in P.prec:
                return False
            if (y2, y) in Q.prec and (x2, x) not in P.prec:
                return False
            if P.concurrent(x, x2):
                if (x, x2) in P.evord and (y, y2) not in Q.evord:
                    return False
                if (x2, x) in P.evord and (y2, y) not in Q.evord:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used or not consistent(x, y):
                continue
            f[x] = y
            used.add(y)
            if extend(k + 1):
                return True
            del f[x]
            used.discard(y)
        return False

    if extend(0):
        return dict(sorted(f.items()))
    return None


def subsumes(P: Ipomset, Q: Ipomset) -> bool:
    """Decide P ⊑ Q."""
    if P == Q:
        return True
    return find_subsumption(P, Q) is not None


def subsumption_verdict(P: Ipomset, Q: Ipomset) -> SubsumptionVerdict:
    mapping = find_subsumption(P, Q)
    return SubsumptionVerdict(holds=mapping is not None, left=str(P), right=str(Q), mapping=mapping)


def is_isomorphic(P: Ipomset, Q: Ipomset) -> bool:
    return P == Q


def _executions(P: Ipomset) -> Iterable[dict[int, tuple[int, int]]]:
    """All alternating executions of ``P``'s events that respect its
    precedence and interfaces, as begin/end step indices per event."""
    preds = [frozenset(x for x, y2 in P.prec if y2 == y) for y in range(P.n)]
    never = P.n * 2 + 2
    begin = {x: 0 for x in P.source}
    end: dict[int, int] = {}

    def subsets(items: list[int]) -> Iterable[frozenset[int]]:
        for mask in range(1, 1 << len(items)):
            yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)

    def walk(step: int, last: str | None) -> Iterable[dict[int, tuple[int, int]]]:
        if len(begin) == P.n and set(begin) - set(end) == P.target:
            yield {x: (begin[x], end.get(x, never)) for x in range(P.n)}
            return
        done = set(end)
        if last != "starter":
            startable = [y for y in range(P.n) if y not in begin and preds[y] <= done]
            for chosen in subsets(startable):
                for y in chosen:
                    begin[y] = step
                yield from walk(step + 1, "starter")
                for y in chosen:
                    del begin[y]
        if last != "terminator":
            terminable = [x for x in begin if x not in end and x not in P.target]
            for chosen in subsets(terminable):
                for x in chosen:
                    end[x] = step
                yield from walk(step + 1, "terminator")
                for x in chosen:
                    del end[x]

    yield from walk(1, None)


def refinements(P: Ipomset) -> set[Ipomset]:
    """All ipomsets subsumed by ``P``, including ``P`` itself."""
    found: set[Ipomset] = set()
    for interval in _executions(P):
        prec = [(x, y) for x in range(P.n) for y in range(P.n) if interval[x][1] < interval[y][0]]
        found.add(normalize(P.labels, P.source, P.target, prec, P.evord))
    logger.debug("%d refinements of %s", len(found), P)
    return found


def down_close(X: Iterable[Ipomset]) -> set[Ipomset]:
    closed: set[Ipomset] = set()
    for P in X:
        if P not in closed:
            closed |= refinements(P)
    return closed
