"""Finite higher-dimensional automata.

A cell stores its loset of active events together with its singleton faces:
``lower[i]`` unstarts and ``upper[i]`` terminates the event at position
``i``. Composite faces are derived; removing position ``i`` shifts the
higher positions down by one.
"""

import functools
import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator
from typing import Literal, NamedTuple

from pydantic import BaseModel, ConfigDict

from errors import FaceTypingError, HdaLangError, IdentityViolation, UnknownCell
from ipomsets.core import Loset

logger = logging.getLogger(__name__)

FaceKind = Literal[0, 1]


class Cell(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    loset: Loset = ()
    lower: tuple[str, ...] = ()
    upper: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.loset)


class Hda(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    cells: tuple[Cell, ...] = ()
    start: frozenset[str] = frozenset()
    accept: frozenset[str] = frozenset()

    @property
    def cell_ids(self) -> list[str]:
        return [cell.id for cell in self.cells]

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(label for cell in self.cells for label in cell.loset)

    def cell(self, cell_id: str) -> Cell:
        try:
            return hda_index(self).cells[cell_id]
        except KeyError:
            raise UnknownCell(cell_id) from None

    def ev(self, cell_id: str) -> Loset:
        return self.cell(cell_id).loset

    def face(self, cell_id: str, kind: FaceKind, position: int) -> str:
        cell = self.cell(cell_id)
        faces = cell.lower if kind == 0 else cell.upper
        if not 0 <= position < len(faces):
            raise FaceTypingError(cell_id, position, f"d{kind}", "position out of range")
        return faces[position]

    def cells_of_dim(self, dim: int) -> list[Cell]:
        return [cell for cell in self.cells if cell.dim == dim]

    def sub_hda(self, keep: Iterable[str], name: str | None = None) -> "Hda":
        """The sub-HDA on ``keep``, which must be closed under faces."""
        keep = set(keep)
        for cell_id in keep:
            for face in (*self.cell(cell_id).lower, *self.cell(cell_id).upper):
                if face not in keep:
                    raise UnknownCell(face, f"face of {cell_id} outside the sub-HDA")
        return Hda(
            name=self.name if name is None else name,
            cells=tuple(cell for cell in self.cells if cell.id in keep),
            start=self.start & keep,
            accept=self.accept & keep,
        )


class HdaIndex(NamedTuple):
    cells: dict[str, Cell]
    # x -> [(y, A)] with δ⁰_A(y) = x, resp. δ¹_A(y) = x, for nonempty A
    lower_cofaces: dict[str, list[tuple[str, frozenset[int]]]]
    upper_cofaces: dict[str, list[tuple[str, frozenset[int]]]]


def _cells(X: Hda) -> dict[str, Cell]:
    return {cell.id: cell for cell in X.cells}


def _compose(cells: dict[str, Cell], cell_id: str, lower: frozenset[int], upper: frozenset[int]) -> str | None:
    """δ⁰_A δ¹_B over a raw cell table; None when a face is missing."""
    current = cell_id
    for i in sorted(lower | upper, reverse=True):
        cell = cells.get(current)
        faces = () if cell is None else (cell.lower if i in lower else cell.upper)
        if i >= len(faces):
            return None
        current = faces[i]
    return current if current in cells else None


@functools.lru_cache(maxsize=32)
def hda_index(X: Hda) -> HdaIndex:
    cells = _cells(X)
    index = HdaIndex(cells, defaultdict(list), defaultdict(list))
    for cell in X.cells:
        for size in range(1, cell.dim + 1):
            for A in itertools.combinations(range(cell.dim), size):
                A = frozenset(A)
                for kind, faces in ((0, index.lower_cofaces), (1, index.upper_cofaces)):
                    face = _compose(cells, cell.id, A if kind == 0 else frozenset(), A if kind == 1 else frozenset())
                    if face is not None:
                        faces[face].append((cell.id, A))
    logger.debug("indexed %s: %d cells", X.name or "hda", len(cells))
    return index


def lower_cofaces(X: Hda, cell_id: str) -> list[tuple[str, frozenset[int]]]:
    return hda_index(X).lower_cofaces.get(cell_id, [])


def upper_cofaces(X: Hda, cell_id: str) -> list[tuple[str, frozenset[int]]]:
    return hda_index(X).upper_cofaces.get(cell_id, [])


def composite_face(X: Hda, cell_id: str, kind: FaceKind, A: Iterable[int]) -> str:
    """δ^kind_A(cell), applying singleton faces in descending position order."""
    return mixed_face(X, cell_id, A if kind == 0 else (), A if kind == 1 else ())


def mixed_face(X: Hda, cell_id: str, lower: Iterable[int], upper: Iterable[int]) -> str:
    """δ⁰_A δ¹_B(cell) for disjoint position sets A and B."""
    lower = frozenset(lower)
    upper = frozenset(upper)
    if lower & upper:
        raise FaceTypingError(cell_id, min(lower & upper), "d0/d1", "face positions overlap")
    dim = X.cell(cell_id).dim
    for i in lower | upper:
        if not 0 <= i < dim:
            raise FaceTypingError(cell_id, i, "d", "position out of range")
    current = cell_id
    for i in sorted(lower | upper, reverse=True):
        current = X.face(current, 0 if i in lower else 1, i)
    return current


def drop_positions(U: Loset, A: Iterable[int]) -> Loset:
    A = set(A)
    return tuple(label for i, label in enumerate(U) if i not in A)


def iter_problems(X: Hda) -> Iterator[HdaLangError]:
    cells: dict[str, Cell] = {}
    for cell in X.cells:
        if cell.id in cells:
            yield HdaLangError(f"cell {cell.id} is defined twice")
        cells[cell.id] = cell
    for cell_id in sorted(X.start | X.accept):
        if cell_id not in cells:
            yield UnknownCell(cell_id, "start or accept set")

    typed: set[str] = set()
    for cell in X.cells:
        ok = True
        for kind, faces in ((0, cell.lower), (1, cell.upper)):
            if len(faces) != cell.dim:
                yield FaceTypingError(cell.id, len(faces), f"d{kind}", f"expected {cell.dim} faces, found {len(faces)}")
                ok = False
                continue
            for i, face in enumerate(faces):
                if face not in cells:
                    yield FaceTypingError(cell.id, i, face, "no such cell")
                    ok = False
                elif cells[face].loset != drop_positions(cell.loset, {i}):
                    yield FaceTypingError(
                        cell.id, i, face, f"face has loset [{' '.join(cells[face].loset)}]"
                    )
                    ok = False
        if ok:
            typed.add(cell.id)

    def f(cell_id: str, kind: int, i: int) -> str:
        cell = cells[cell_id]
        return (cell.lower if kind == 0 else cell.upper)[i]

    for cell in X.cells:
        if cell.id not in typed or cell.dim < 2:
            continue
        for i, j in itertools.combinations(range(cell.dim), 2):
            for nu, mu in itertools.product((0, 1), repeat=2):
                first, second = f(cell.id, mu, j), f(cell.id, nu, i)
                if first not in typed or second not in typed:
                    continue
                left = f(first, nu, i)
                right = f(second, mu, j - 1)
                if left != right:
                    yield IdentityViolation(cell.id, i, j, (nu, mu), left, right)


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    valid: bool
    cells: int
    problems: tuple[str, ...] = ()


def validate(X: Hda) -> ValidationReport:
    problems = [str(problem) for problem in iter_problems(X)]
    logger.info("validated %s: %d problems", X.name or "hda", len(problems))
    return ValidationReport(valid=not problems, cells=len(X.cells), problems=tuple(problems))


def check(X: Hda) -> Hda:
    """Return ``X`` if it is a valid HDA, otherwise raise the first problem."""
    for problem in iter_problems(X):
        raise problem
    return X
