"""Prefix and suffix quotients of finite languages, equivalences and
swap-invariance.

Every quotient of a finite language is read off the divisions of its
members: Q ∈ P\\L iff (P, Q) is a division of some member of L.
"""

import functools
import itertools
import logging
from collections import defaultdict
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict

from ipomsets.core import Ipomset
from ipomsets.divisions import enumerate_divisions
from ipomsets.signatures import fin, remove_target_positions, rfin_positions
from ipomsets.subsumption import refinements
from languages.language import LanguageSet, render_set

logger = logging.getLogger(__name__)

Quotient = frozenset[Ipomset]


class QuotientIndex(NamedTuple):
    by_prefix: dict[Ipomset, Quotient]
    by_suffix: dict[Ipomset, Quotient]


@functools.lru_cache(maxsize=64)
def quotient_index(L: LanguageSet) -> QuotientIndex:
    by_prefix: dict[Ipomset, set[Ipomset]] = defaultdict(set)
    by_suffix: dict[Ipomset, set[Ipomset]] = defaultdict(set)
    for M in L.members:
        for division in enumerate_divisions(M):
            by_prefix[division.left].add(division.right)
            by_suffix[division.right].add(division.left)
    logger.debug("quotient index: %d prefixes, %d suffixes", len(by_prefix), len(by_suffix))
    return QuotientIndex(
        by_prefix={P: frozenset(Qs) for P, Qs in by_prefix.items()},
        by_suffix={Q: frozenset(Ps) for Q, Ps in by_suffix.items()},
    )


def prefix_quotient(L: LanguageSet, P: Ipomset) -> Quotient:
    """P\\L = {Q | P*Q ∈ L}."""
    return quotient_index(L).by_prefix.get(P, frozenset())


def suffix_quotient(L: LanguageSet, P: Ipomset) -> Quotient:
    """L/P = {Q | Q*P ∈ L}."""
    return quotient_index(L).by_suffix.get(P, frozenset())


def prefixes(L: LanguageSet) -> set[Ipomset]:
    return set(quotient_index(L).by_prefix)


def suffixes(L: LanguageSet) -> set[Ipomset]:
    return set(quotient_index(L).by_suffix)


def quotient_key(quotient: Quotient) -> tuple[Ipomset, ...]:
    return tuple(sorted(quotient))


class QuotientFamily(NamedTuple):
    """Distinct quotient values, each with the ipomsets producing it.

    The empty quotient is always present; its representatives are left
    empty since every non-prefix produces it.
    """

    values: dict[tuple[Ipomset, ...], tuple[Ipomset, ...]]

    @property
    def cardinality(self) -> int:
        return len(self.values)

    def rows(self) -> list[tuple[tuple[Ipomset, ...], tuple[Ipomset, ...]]]:
        return sorted(self.values.items(), key=lambda row: (len(row[0]), [P.sort_key() for P in row[0]]))


def _family(by_key: dict[Ipomset, Quotient]) -> QuotientFamily:
    grouped: dict[tuple[Ipomset, ...], list[Ipomset]] = defaultdict(list)
    for P, quotient in by_key.items():
        grouped[quotient_key(quotient)].append(P)
    grouped.setdefault((), [])
    return QuotientFamily(values={k: tuple(sorted(v)) for k, v in grouped.items()})


def suffix_quotient_family(L: LanguageSet) -> QuotientFamily:
    """suff(L): the distinct prefix quotients P\\L."""
    return _family(quotient_index(L).by_prefix)


def prefix_quotient_family(L: LanguageSet) -> QuotientFamily:
    """pref(L): the distinct suffix quotients L/P."""
    return _family(quotient_index(L).by_suffix)


def weak_equiv(P: Ipomset, Q: Ipomset, L: LanguageSet) -> bool:
    return fin(P) == fin(Q) and prefix_quotient(L, P) == prefix_quotient(L, Q)


def removal_family(P: Ipomset, L: LanguageSet) -> tuple[tuple[Ipomset, ...], ...]:
    """The quotients (P−A)\\L for every A ⊆ rfin(P), with A ranging over
    subsets of target positions by size, then lexicographically."""
    positions = sorted(rfin_positions(P))
    family = []
    for size in range(len(positions) + 1):
        for A in itertools.combinations(positions, size):
            family.append(quotient_key(prefix_quotient(L, remove_target_positions(P, A))))
    return tuple(family)


def strong_equiv(P: Ipomset, Q: Ipomset, L: LanguageSet) -> bool:
    if fin(P) != fin(Q):
        return False
    return removal_family(P, L) == removal_family(Q, L)


class SwapWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    smaller: Ipomset
    larger: Ipomset
    smaller_quotient: tuple[Ipomset, ...]
    larger_quotient: tuple[Ipomset, ...]

    def __str__(self) -> str:
        return (
            f"{self.smaller} ⊑ {self.larger} but "
            f"{self.smaller}\\L = {render_set(self.smaller_quotient)} ≠ "
            f"{render_set(self.larger_quotient)} = {self.larger}\\L"
        )


class SwapVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    witnesses: tuple[SwapWitness, ...] = ()

    @property
    def witness(self) -> SwapWitness | None:
        return self.witnesses[0] if self.witnesses else None


def is_swap_invariant(L: LanguageSet) -> SwapVerdict:
    """Check that P ⊑ Q implies P\\L = Q\\L whenever Q\\L is nonempty.

    Only prefixes need checking: if Q is a prefix and P ⊑ Q, then
    Q\\L ⊆ P\\L, so P is a prefix too.
    """
    witnesses = []
    for Q in sorted(prefixes(L)):
        larger = prefix_quotient(L, Q)
        for P in sorted(refinements(Q)):
            smaller = prefix_quotient(L, P)
            if smaller != larger:
                witnesses.append(
                    SwapWitness(
                        smaller=P,
                        larger=Q,
                        smaller_quotient=quotient_key(smaller),
                        larger_quotient=quotient_key(larger),
                    )
                )
    logger.info("swap invariance: %d violations", len(witnesses))
    return SwapVerdict(holds=not witnesses, witnesses=tuple(witnesses))
