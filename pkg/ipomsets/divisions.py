import itertools
import logging
from typing import NamedTuple

from errors import HdaLangError
from ipomsets.core import Ipomset, restrict
from ipomsets.steps import glue

logger = logging.getLogger(__name__)

LEFT, SHARED, RIGHT = 0, 1, 2


class Division(NamedTuple):
    """A pair (P, Q) with P*Q ≅ M."""

    left: Ipomset
    right: Ipomset


def _admissible(M: Ipomset, part: tuple[int, ...]) -> bool:
    if any(part[x] == RIGHT for x in M.source) or any(part[x] == LEFT for x in M.target):
        return False
    for x, y in M.prec:
        # shared events form an antichain and nothing precedes backwards
        if (part[x], part[y]) in ((SHARED, SHARED), (SHARED, LEFT), (RIGHT, SHARED), (RIGHT, LEFT)):
            return False
    left = [x for x in range(M.n) if part[x] == LEFT]
    right = [x for x in range(M.n) if part[x] == RIGHT]
    return all((x, y) in M.prec for x in left for y in right)


def enumerate_divisions(M: Ipomset) -> list[Division]:
    """All divisions of ``M``, sorted by (left, right)."""
    found: set[Division] = set()
    for part in itertools.product((LEFT, SHARED, RIGHT), repeat=M.n):
        if not _admissible(M, part):
            continue
        left_events = [x for x in range(M.n) if part[x] != RIGHT]
        right_events = [x for x in range(M.n) if part[x] != LEFT]
        shared = [x for x in range(M.n) if part[x] == SHARED]
        try:
            P = restrict(M, left_events, M.source, shared)
            Q = restrict(M, right_events, shared, M.target)
            if glue(P, Q) != M:
                continue
        except HdaLangError:
            continue
        found.add(Division(P, Q))
    logger.debug("%d divisions of %s", len(found), M)
    return sorted(found, key=lambda d: (d.left.sort_key(), d.right.sort_key()))
