from collections.abc import Iterable

from errors import NotRemovable
from ipomsets.core import Ipomset, restrict
from ipomsets.steps import StarterTerminator


def rfin(P: Ipomset) -> frozenset[int]:
    """Target events of ``P`` that are not also source events."""
    return P.target - P.source


def rfin_positions(P: Ipomset) -> frozenset[int]:
    """rfin(P) as positions in the target loset of ``P``."""
    removable = rfin(P)
    return frozenset(i for i, x in enumerate(P.loset_order(P.target)) if x in removable)


def fin(P: Ipomset) -> StarterTerminator:
    """Target signature T_P↑rfin(P)."""
    return StarterTerminator(kind="starter", loset=P.target_loset, active=rfin_positions(P))


def remove_targets(P: Ipomset, A: Iterable[int]) -> Ipomset:
    """P − A for a set ``A`` of events taken from rfin(P)."""
    A = frozenset(A)
    if not A <= rfin(P):
        raise NotRemovable(A - rfin(P))
    if not A:
        return P
    return restrict(P, (x for x in range(P.n) if x not in A), P.source, P.target - A)


def remove_target_positions(P: Ipomset, positions: Iterable[int]) -> Ipomset:
    """P − A with ``A`` given as positions in the target loset."""
    targets = P.loset_order(P.target)
    return remove_targets(P, (targets[i] for i in positions))
