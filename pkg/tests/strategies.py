"""Hypothesis strategies: ipomsets drawn as random activity intervals and
finite languages closed from a few generators."""

import hypothesis.strategies as st

from ipomsets.core import Ipomset
from ipomsets.intervals import EventInterval, IntervalRep, from_intervals
from languages.language import LanguageSet

LABELS = "abcd"


@st.composite
def interval_reps(draw, max_events: int = 5, labels: str = LABELS, interfaces: bool = True) -> IntervalRep:
    n = draw(st.integers(min_value=0, max_value=max_events))
    horizon = 2 * n + 1
    ranks = draw(st.permutations(range(n)))
    events = []
    for x in range(n):
        begin, end = sorted(draw(st.tuples(st.integers(0, horizon), st.integers(0, horizon))))
        # interface events touch the boundary, so nothing can precede or follow them
        open_left = interfaces and begin == 0 and draw(st.booleans())
        open_right = interfaces and end == horizon and draw(st.booleans())
        events.append(
            EventInterval(
                label=draw(st.sampled_from(labels)),
                begin=begin,
                end=end,
                open_left=open_left,
                open_right=open_right,
                rank=ranks[x],
            )
        )
    return IntervalRep(events=tuple(events))


def ipomsets(max_events: int = 5, labels: str = LABELS, interfaces: bool = True) -> st.SearchStrategy[Ipomset]:
    return interval_reps(max_events, labels, interfaces).map(from_intervals)


def languages(max_generators: int = 3, max_events: int = 3, labels: str = LABELS[:3]) -> st.SearchStrategy[LanguageSet]:
    return st.lists(ipomsets(max_events, labels), min_size=1, max_size=max_generators).map(
        LanguageSet.from_generators
    )
