"""The class table written next to a built MN automaton."""

from pydantic import BaseModel

from ipomsets.formats import to_block
from mn.construction import MnAutomaton


class ClassRow(BaseModel):
    id: str
    kind: str
    loset: list[str]
    representative: str | None = None
    representative_block: str | None = None
    representatives: list[str] = []
    quotient: list[str] = []
    essential: bool = False
    subsidiary: bool = False
    start: bool = False
    accept: bool = False


class ClassTable(BaseModel):
    cells: list[ClassRow]

    def class_of(self) -> dict[str, str]:
        """Rendered ipomset -> id of the class it was classified into."""
        return {P: row.id for row in self.cells for P in row.representatives}


def class_table(M: MnAutomaton) -> ClassTable:
    rows = []
    for cell in M.cells:
        P = cell.representative
        rows.append(
            ClassRow(
                id=cell.id,
                kind=cell.kind,
                loset=list(cell.loset),
                representative=None if P is None else str(P),
                representative_block=None if P is None else to_block(P, cell.id),
                representatives=[str(Q) for Q in cell.representatives],
                quotient=[str(Q) for Q in cell.quotient],
                essential=cell.essential,
                subsidiary=cell.kind == "subsidiary",
                start=cell.id in M.hda.start,
                accept=cell.id in M.hda.accept,
            )
        )
    return ClassTable(cells=rows)
