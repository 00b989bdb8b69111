"""The ``.lang`` language file format::

    # comment
    alphabet: a b c
    closed: false
    members:
    [a∥b]
    abc
    ipomset n { events: x:a, y:b ; prec: x<y }

``closed: false`` (the default) means the members are generators and the
language is their downward closure. Members are shorthand expressions, one
per line, or ipomset blocks.
"""

import re
from pathlib import Path

from errors import ParseError
from ipomsets.core import Ipomset
from ipomsets.formats import iter_blocks, canonicalize, parse_expression, to_block, to_expression
from languages.language import LanguageSet

_HEADER = re.compile(r"^\s*(alphabet|closed|members)\s*:\s*(.*)$")


def parse_language(text: str, source: str = "<lang>", alphabet: set[str] | None = None) -> LanguageSet:
    """Parse a language file; ``alphabet`` overrides the declared one."""
    lines = text.splitlines()
    declared: set[str] | None = None
    closed = False
    body_start = None
    for number, line in enumerate(lines, 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        match = _HEADER.match(stripped)
        if not match:
            raise ParseError(source, number, f"expected a header line, got {stripped!r}")
        key, value = match.groups()
        if key == "alphabet":
            declared = set(value.split())
        elif key == "closed":
            if value.strip() not in ("true", "false"):
                raise ParseError(source, number, "closed must be true or false")
            closed = value.strip() == "true"
        else:
            if value.strip():
                raise ParseError(source, number, "members start on the next line")
            body_start = number
            break
    if body_start is None:
        raise ParseError(source, len(lines), "missing members section")

    members = _parse_members(lines[body_start:], body_start, source)
    if alphabet is not None:
        declared = set(alphabet)
    if declared is not None:
        for P in members:
            stray = set(P.labels) - declared
            if stray:
                raise ParseError(source, body_start, f"{P} uses labels {sorted(stray)} outside the alphabet")
    declared = declared or set()
    if closed:
        return LanguageSet.closed(members, declared)
    return LanguageSet.from_generators(members, declared)


def _parse_members(lines: list[str], offset: int, source: str) -> list[Ipomset]:
    text = "\n".join(line.split("#", 1)[0] for line in lines)
    members: list[Ipomset] = []
    position = 0
    for start, end, raw in iter_blocks(text, source):
        members.extend(_expressions(text[position:start], offset, text, position, source))
        members.append(canonicalize(raw))
        position = end
    members.extend(_expressions(text[position:], offset, text, position, source))
    return members


def _expressions(chunk: str, offset: int, text: str, position: int, source: str) -> list[Ipomset]:
    found = []
    first_line = offset + text.count("\n", 0, position) + 1
    for i, line in enumerate(chunk.splitlines()):
        if line.strip():
            found.append(parse_expression(line, f"{source}:{first_line + i}"))
    return found


def load_language(path: str | Path, alphabet: set[str] | None = None) -> LanguageSet:
    path = Path(path)
    return parse_language(path.read_text(encoding="utf-8"), str(path), alphabet)


def to_language_text(L: LanguageSet, closed: bool = True) -> str:
    """Emit ``L`` in the ``.lang`` format, all members or only generators."""
    members = L.sorted_members() if closed else sorted(L.generators)
    lines = [
        "alphabet: " + " ".join(sorted(L.alphabet)),
        f"closed: {'true' if closed else 'false'}",
        "members:",
    ]
    for index, P in enumerate(members):
        expression = to_expression(P)
        lines.append(expression if expression is not None else to_block(P, f"m{index}"))
    return "\n".join(lines) + "\n"
