"""Myhill-Nerode automata of finite languages.

Cells are classes of strong equivalence ≈_L, found by closing the prefixes
of L under faces:

* upper faces  δ¹_i([P]) = [P * T_P↓i]
* lower faces  δ⁰_i([P]) = [P − x] when the i-th target event x is in
  rfin(P), and the subsidiary cell w_{T_P − i} otherwise.

Subsidiary cells have only subsidiary faces and are never accessible.
"""

import logging
from collections import deque
from collections.abc import Callable, Iterable
from typing import Literal

from pydantic import BaseModel, ConfigDict

from errors import NotDownClosed
from hda.automaton import Cell, Hda, drop_positions
from ipomsets.core import Ipomset, Loset
from ipomsets.signatures import fin, remove_targets, rfin
from ipomsets.steps import StarterTerminator, glue, identity, terminator
from languages.language import LanguageSet
from languages.quotients import prefix_quotient, prefixes, quotient_key, removal_family

logger = logging.getLogger(__name__)

ClassKey = tuple[tuple[Ipomset, ...], StarterTerminator, tuple[tuple[Ipomset, ...], ...]]


def classify(P: Ipomset, L: LanguageSet) -> ClassKey:
    """(P\\L, fin(P), ((P−A)\\L) for A ⊆ rfin(P)); equal keys are exactly
    strongly equivalent ipomsets."""
    return quotient_key(prefix_quotient(L, P)), fin(P), removal_family(P, L)


class MnCell(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    kind: Literal["regular", "subsidiary"]
    loset: Loset
    representative: Ipomset | None = None
    # every prefix or face representative classified into this cell
    representatives: tuple[Ipomset, ...] = ()
    quotient: tuple[Ipomset, ...] = ()

    @property
    def essential(self) -> bool:
        return bool(self.quotient)


class MnAutomaton(BaseModel):
    model_config = ConfigDict(frozen=True)

    hda: Hda
    cells: tuple[MnCell, ...]

    def cell(self, cell_id: str) -> MnCell:
        for cell in self.cells:
            if cell.id == cell_id:
                return cell
        raise KeyError(cell_id)

    def essential_cells(self) -> list[MnCell]:
        return [cell for cell in self.cells if cell.essential]

    def cell_of(self, P: Ipomset) -> MnCell | None:
        """The regular cell into which ``P`` was classified while building."""
        for cell in self.cells:
            if P in cell.representatives:
                return cell
        return None

    def class_ids(self) -> dict[Ipomset, str]:
        return {P: cell.id for cell in self.cells for P in cell.representatives}

    def captions(self) -> dict[str, str]:
        return {
            cell.id: str(cell.representative) if cell.kind == "regular" else f"w_{''.join(cell.loset) or 'ε'}"
            for cell in self.cells
        }


DiscoveryOrder = Callable[[Iterable[Ipomset]], list[Ipomset]]


class _Builder:
    def __init__(self, L: LanguageSet, order: DiscoveryOrder):
        self.L = L
        self.order = order
        self.ids: dict[ClassKey, str] = {}
        self.subsidiary: dict[Loset, str] = {}
        self.representatives: dict[str, list[Ipomset]] = {}
        self.faces: dict[str, tuple[list[str], list[str]]] = {}
        self.worklist: deque[str] = deque()

    def regular(self, P: Ipomset) -> str:
        key = classify(P, self.L)
        if key not in self.ids:
            cell_id = f"c{len(self.ids)}"
            self.ids[key] = cell_id
            self.representatives[cell_id] = []
            self.worklist.append(cell_id)
        cell_id = self.ids[key]
        if P not in self.representatives[cell_id]:
            self.representatives[cell_id].append(P)
        return cell_id

    def subsidiary_cell(self, U: Loset) -> str:
        if U not in self.subsidiary:
            cell_id = f"w{len(self.subsidiary)}"
            self.subsidiary[U] = cell_id
            faces = [self.subsidiary_cell(drop_positions(U, {i})) for i in range(len(U))]
            self.faces[cell_id] = (faces, list(faces))
        return self.subsidiary[U]

    def expand(self, cell_id: str) -> None:
        P = self.representatives[cell_id][0]
        targets = P.loset_order(P.target)
        U = P.target_loset
        removable = rfin(P)
        lower, upper = [], []
        for i, x in enumerate(targets):
            upper.append(self.regular(glue(P, terminator(U, {i}))))
            if x in removable:
                lower.append(self.regular(remove_targets(P, {x})))
            else:
                lower.append(self.subsidiary_cell(drop_positions(U, {i})))
        self.faces[cell_id] = (lower, upper)

    def run(self) -> None:
        for P in self.order(prefixes(self.L)):
            self.regular(P)
        while self.worklist:
            self.expand(self.worklist.popleft())
            logger.debug("mn closure: %d classes, %d pending", len(self.ids), len(self.worklist))


def build_mn(L: LanguageSet, order: DiscoveryOrder = sorted) -> MnAutomaton:
    """MN(L) for a finite down-closed ``L``; ``order`` fixes the order in
    which prefixes are classified, which only affects cell ids and the
    chosen representatives."""
    missing = L.missing_refinements()
    if missing:
        raise NotDownClosed(missing)
    builder = _Builder(L, order)
    builder.run()

    sources = {P.source_loset for P in L.members}
    start = {builder.ids[classify(identity(U), L)] for U in sources}
    cells: list[MnCell] = []
    hda_cells: list[Cell] = []
    accept: set[str] = set()
    for key, cell_id in builder.ids.items():
        found = builder.representatives[cell_id]
        U = found[0].target_loset
        quotient = key[0]
        cells.append(
            MnCell(
                id=cell_id,
                kind="regular",
                loset=U,
                representative=found[0],
                representatives=tuple(found),
                quotient=quotient,
            )
        )
        # P ∈ L iff id_{T_P} ∈ P\L
        if identity(U) in quotient:
            accept.add(cell_id)
    for U, cell_id in builder.subsidiary.items():
        cells.append(MnCell(id=cell_id, kind="subsidiary", loset=U))
    for cell in cells:
        lower, upper = builder.faces[cell.id]
        hda_cells.append(Cell(id=cell.id, loset=cell.loset, lower=tuple(lower), upper=tuple(upper)))

    M = MnAutomaton(
        hda=Hda(name="mn", cells=tuple(hda_cells), start=frozenset(start), accept=frozenset(accept)),
        cells=tuple(cells),
    )
    logger.info(
        "built MN automaton: %d regular cells (%d essential), %d subsidiary",
        len(builder.ids), len(M.essential_cells()), len(builder.subsidiary),
    )
    return M
