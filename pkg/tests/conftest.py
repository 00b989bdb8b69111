from pathlib import Path

import pytest

from hda.automaton import Hda, check
from hda.formats import load_hda
from ipomsets.core import Ipomset
from ipomsets.formats import parse_block, parse_expression
from languages.formats import load_language
from languages.language import LanguageSet
from mn.construction import MnAutomaton, classify

DATA = Path(__file__).resolve().parent.parent / "data"


def expr(text: str) -> Ipomset:
    return parse_expression(text)


def exprs(*texts: str) -> set[Ipomset]:
    return {parse_expression(text) for text in texts}


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def square() -> Hda:
    return check(load_hda(DATA / "square.hda"))


@pytest.fixture
def grid() -> Hda:
    return check(load_hda(DATA / "grid.hda"))


@pytest.fixture
def loop_hda() -> Hda:
    return check(load_hda(DATA / "loop.hda"))


@pytest.fixture
def relay() -> Ipomset:
    return parse_block((DATA / "relay.ipo").read_text(encoding="utf-8"))[1]


@pytest.fixture
def nondet() -> LanguageSet:
    return load_language(DATA / "nondet.lang")


@pytest.fixture
def strongeq() -> LanguageSet:
    return load_language(DATA / "strongeq.lang")


@pytest.fixture
def aa_lang() -> LanguageSet:
    return load_language(DATA / "aa.lang")


@pytest.fixture
def det_lang() -> LanguageSet:
    return load_language(DATA / "det.lang")


def mn_shape(M: MnAutomaton, L: LanguageSet) -> set[tuple]:
    """The automaton with every cell replaced by its class key (or by its
    loset for subsidiary cells), independent of cell ids."""

    def key(cell_id: str):
        cell = M.cell(cell_id)
        return classify(cell.representative, L) if cell.kind == "regular" else ("w", cell.loset)

    return {
        (
            key(cell.id),
            tuple(key(face) for face in cell.lower),
            tuple(key(face) for face in cell.upper),
            cell.id in M.hda.start,
            cell.id in M.hda.accept,
        )
        for cell in M.hda.cells
    }
