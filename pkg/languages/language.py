import logging
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field

from ipomsets.core import Ipomset
from ipomsets.subsumption import down_close, refinements, subsumes

logger = logging.getLogger(__name__)


class LanguageSet(BaseModel):
    """A finite language of canonical ipomsets.

    ``generators`` records the set the language was closed from, when it
    was given as {…}↓; otherwise it equals ``members``.
    """

    model_config = ConfigDict(frozen=True)

    members: frozenset[Ipomset] = frozenset()
    generators: frozenset[Ipomset] = frozenset()
    alphabet: frozenset[str] = frozenset()

    @classmethod
    def from_generators(cls, generators: Iterable[Ipomset], alphabet: Iterable[str] = ()) -> "LanguageSet":
        generators = frozenset(generators)
        members = frozenset(down_close(generators))
        logger.debug("closed %d generators to %d members", len(generators), len(members))
        return cls(
            members=members,
            generators=generators,
            alphabet=frozenset(alphabet) | _labels(members),
        )

    @classmethod
    def closed(cls, members: Iterable[Ipomset], alphabet: Iterable[str] = ()) -> "LanguageSet":
        """Wrap a member set as given, without closing it."""
        members = frozenset(members)
        return cls(members=members, generators=members, alphabet=frozenset(alphabet) | _labels(members))

    def contains(self, P: Ipomset) -> bool:
        return P in self.members or any(subsumes(P, g) for g in self.generators)

    def missing_refinements(self) -> list[Ipomset]:
        """Refinements of members that are not members themselves."""
        missing: set[Ipomset] = set()
        for Q in self.members:
            missing |= refinements(Q) - self.members
        return sorted(missing)

    def is_down_closed(self) -> bool:
        return not self.missing_refinements()

    def sorted_members(self) -> list[Ipomset]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return render_set(self.members)


def _labels(members: Iterable[Ipomset]) -> frozenset[str]:
    return frozenset(label for P in members for label in P.labels)


def render_set(items: Iterable[Ipomset]) -> str:
    return "{" + ", ".join(str(P) for P in sorted(items)) + "}"
