from pathlib import Path

from context import CommandContext
from errors import ParseError
from hda.automaton import Hda, check
from hda.formats import load_hda
from ipomsets.core import Ipomset
from ipomsets.formats import parse_blocks, parse_ipomset
from languages.formats import load_language
from languages.language import LanguageSet


def read_ipomsets(given: str) -> list[tuple[str, Ipomset]]:
    """An ``.ipo`` file of blocks, or a single expression or inline block."""
    path = Path(given)
    if path.suffix == ".ipo" and path.is_file():
        return parse_blocks(path.read_text(encoding="utf-8"), str(path))
    return [("", parse_ipomset(given))]


def read_ipomset(given: str) -> Ipomset:
    found = read_ipomsets(given)
    if len(found) != 1:
        raise ParseError(given, 1, f"expected a single ipomset, found {len(found)}")
    return found[0][1]


def read_hda(given: str) -> Hda:
    return check(load_hda(given))


def read_language(ctx: CommandContext, given: str) -> LanguageSet:
    return load_language(given, ctx.alphabet_set())
