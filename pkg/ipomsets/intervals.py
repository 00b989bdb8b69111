"""Interval representations: each event is an activity interval [begin, end]."""

from decimal import Decimal

from pydantic import BaseModel, ConfigDict, model_validator

from errors import MalformedInterval
from ipomsets.core import Ipomset, normalize
from ipomsets.steps import event_steps


class EventInterval(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    begin: Decimal
    end: Decimal
    open_left: bool = False   # source interface
    open_right: bool = False  # target interface
    rank: int = 0             # event order among concurrent events

    @model_validator(mode="after")
    def _ordered(self) -> "EventInterval":
        if self.begin > self.end:
            raise MalformedInterval(self.label, self.begin, self.end)
        return self


class IntervalRep(BaseModel):
    model_config = ConfigDict(frozen=True)

    events: tuple[EventInterval, ...] = ()


def _evord_rank(P: Ipomset) -> list[int]:
    # Counting predecessors gives a linear extension of a transitive order.
    weight = {x: (sum((y, x) in P.evord for y in range(P.n)), x) for x in range(P.n)}
    order = sorted(range(P.n), key=weight.__getitem__)
    rank = [0] * P.n
    for r, x in enumerate(order):
        rank[x] = r
    return rank


def interval_representation(P: Ipomset) -> IntervalRep:
    """Integer intervals read off the sparse step decomposition.

    Events begin at the index of the starter introducing them (0 for
    sources) and end at the index of the terminator removing them; targets
    end at the last index.
    """
    steps = event_steps(P)
    last = max((k for pair in steps.values() for k in pair if k is not None), default=0)
    rank = _evord_rank(P)
    return IntervalRep(
        events=tuple(
            EventInterval(
                label=P.labels[x],
                begin=begin,
                end=last if end is None else end,
                open_left=x in P.source,
                open_right=x in P.target,
                rank=rank[x],
            )
            for x, (begin, end) in sorted(steps.items())
        )
    )


def from_intervals(rep: IntervalRep) -> Ipomset:
    """Build the ipomset of an interval representation.

    Precedence is strict interval precedence (end before begin); event order
    between concurrent events follows ``rank``, then position.
    """
    events = rep.events
    n = len(events)
    prec = [(x, y) for x in range(n) for y in range(n) if events[x].end < events[y].begin]
    order = sorted(range(n), key=lambda x: (events[x].rank, x))
    evord = [(x, y) for i, x in enumerate(order) for y in order[i + 1:]]
    return normalize(
        (e.label for e in events),
        (x for x in range(n) if events[x].open_left),
        (x for x in range(n) if events[x].open_right),
        prec,
        [(x, y) for x, y in evord if (x, y) not in prec and (y, x) not in prec],
    )
