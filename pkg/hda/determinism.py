import logging
from collections import defaultdict

from pydantic import BaseModel, ConfigDict

from hda.automaton import Hda, lower_cofaces
from hda.search import essential_report
from ipomsets.core import Loset

logger = logging.getLogger(__name__)


class DeterminismVerdict(BaseModel):
    """``holds`` is False with either several start cells on one loset, or
    several essential cells starting the same events from ``cell``."""

    model_config = ConfigDict(frozen=True)

    holds: bool
    loset: Loset | None = None
    cell: str | None = None
    positions: frozenset[int] | None = None
    cells: tuple[str, ...] = ()

    def describe(self) -> str:
        if self.holds:
            return "deterministic"
        if self.cell is None:
            return f"start cells {', '.join(self.cells)} share loset [{' '.join(self.loset or ())}]"
        started = " ".join(self.loset[i] for i in sorted(self.positions)) if self.loset else ""
        return f"from {self.cell}, starting [{started}] reaches {', '.join(self.cells)}"


def is_deterministic(X: Hda) -> DeterminismVerdict:
    by_loset: dict[Loset, list[str]] = defaultdict(list)
    for cell_id in sorted(X.start):
        by_loset[X.ev(cell_id)].append(cell_id)
    for loset, cells in sorted(by_loset.items()):
        if len(cells) > 1:
            return DeterminismVerdict(holds=False, loset=loset, cells=tuple(cells))

    essential = essential_report(X).essential
    for x in sorted(essential):
        targets: dict[tuple[frozenset[int], Loset], list[str]] = defaultdict(list)
        for y, A in lower_cofaces(X, x):
            if y in essential:
                targets[(A, X.ev(y))].append(y)
        for (A, loset), cells in sorted(targets.items(), key=lambda item: (sorted(item[0][0]), item[0][1])):
            if len(cells) > 1:
                logger.info("nondeterministic at %s: %s", x, cells)
                return DeterminismVerdict(
                    holds=False, loset=loset, cell=x, positions=A, cells=tuple(sorted(cells))
                )
    return DeterminismVerdict(holds=True)
