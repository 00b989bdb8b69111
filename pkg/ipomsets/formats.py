"""Text and JSON formats for ipomsets.

Two notations are understood:

* the shorthand expression, e.g. ``ab•`` or ``[•a•∥c•]``: rows separated by
  ``|`` or ``∥`` in event order, each row a precedence chain of single
  character labels, with an interface mark (``•`` or ``.``) at the start of
  a row for a source event and at its end for a target event; ``ε`` or the
  empty string is the empty ipomset;
* the block format::

    ipomset NAME { events: x:a, y:b ; source: x ; target: y ;
                   prec: x<y ; evord: }

  whitespace-insensitive, ``#`` starts a comment, omitted sections are empty
  and the name is optional.
"""

import functools
import re
from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict, Field

from errors import AxiomViolation, ParseError
from ipomsets.core import EMPTY, Ipomset, normalize

MARKS = "•."
ROW_SEPARATORS = "|∥"
SECTIONS = ("events", "source", "target", "prec", "evord")


class RawIposet(BaseModel):
    """An iposet as written by a user: arbitrary event ids, any numbering."""

    name: str = ""
    events: list[tuple[str, str]] = Field(default_factory=list)
    source: list[str] = Field(default_factory=list)
    target: list[str] = Field(default_factory=list)
    prec: list[tuple[str, str]] = Field(default_factory=list)
    evord: list[tuple[str, str]] = Field(default_factory=list)


def canonicalize(raw: RawIposet) -> Ipomset:
    index: dict[str, int] = {}
    for event_id, _ in raw.events:
        if event_id in index:
            raise AxiomViolation("duplicate event id", event_id)
        index[event_id] = len(index)

    def lookup(event_id: str) -> int:
        try:
            return index[event_id]
        except KeyError:
            raise AxiomViolation("unknown event id", event_id) from None

    return normalize(
        (label for _, label in raw.events),
        map(lookup, raw.source),
        map(lookup, raw.target),
        ((lookup(x), lookup(y)) for x, y in raw.prec),
        ((lookup(x), lookup(y)) for x, y in raw.evord),
    )


# --- shorthand expressions --------------------------------------------------


def parse_expression(text: str, source: str = "<expr>") -> Ipomset:
    text = text.strip()
    if text in ("", "ε"):
        return EMPTY
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    rows = re.split(f"[{ROW_SEPARATORS}]", text)

    labels: list[str] = []
    sources: list[int] = []
    targets: list[int] = []
    prec: list[tuple[int, int]] = []
    row_events: list[list[int]] = []
    for row in rows:
        row = "".join(row.split())
        opened = bool(row) and row[0] in MARKS
        closed = len(row) > int(opened) and row[-1] in MARKS
        body = row[int(opened): len(row) - int(closed)]
        if not body:
            raise ParseError(source, 1, f"empty row in {text!r}")
        if any(ch in MARKS for ch in body):
            raise ParseError(source, 1, f"interface mark inside row {row!r}")
        events = list(range(len(labels), len(labels) + len(body)))
        labels.extend(body)
        prec.extend(zip(events, events[1:]))
        if opened:
            sources.append(events[0])
        if closed:
            targets.append(events[-1])
        row_events.append(events)

    evord = [
        (x, y)
        for i, earlier in enumerate(row_events)
        for later in row_events[i + 1:]
        for x in earlier
        for y in later
    ]
    return normalize(labels, sources, targets, prec, evord)


def _chains(P: Ipomset) -> list[list[int]] | None:
    """Split ``P`` into event-ordered precedence chains, if it is a parallel
    composition of chains."""
    component = list(range(P.n))

    def find(x: int) -> int:
        while component[x] != x:
            component[x] = component[component[x]]
            x = component[x]
        return x

    for x, y in P.prec:
        component[find(x)] = find(y)
    groups: dict[int, list[int]] = {}
    for x in range(P.n):
        groups.setdefault(find(x), []).append(x)

    chains = []
    for events in groups.values():
        events.sort(key=lambda x: sum((y, x) in P.prec for y in events))
        if any((x, y) not in P.prec for i, x in enumerate(events) for y in events[i + 1:]):
            return None
        chains.append(events)

    def compare(c1: list[int], c2: list[int]) -> int:
        return -1 if (c1[0], c2[0]) in P.evord else 1

    chains.sort(key=functools.cmp_to_key(compare))
    for i, earlier in enumerate(chains):
        for later in chains[i + 1:]:
            if any((x, y) not in P.evord for x in earlier for y in later):
                return None
    return chains


def to_expression(P: Ipomset) -> str | None:
    """The shorthand expression of ``P``, or None if it has none."""
    if P.is_empty:
        return "ε"
    if any(len(label) != 1 or label in MARKS + ROW_SEPARATORS + "[]ε" for label in P.labels):
        return None
    chains = _chains(P)
    if chains is None:
        return None
    rows = [
        ("•" if chain[0] in P.source else "")
        + "".join(P.labels[x] for x in chain)
        + ("•" if chain[-1] in P.target else "")
        for chain in chains
    ]
    if len(rows) == 1:
        return rows[0]
    return "[" + "∥".join(rows) + "]"


# --- block format -----------------------------------------------------------

_BLOCK = re.compile(r"ipomset\s*([A-Za-z0-9_.\-]*)\s*\{([^}]*)\}", re.S)
_ID = re.compile(r"^[A-Za-z0-9_]+$")


def _line_of(text: str, offset: int) -> int:
    return text.count("\n", 0, offset) + 1


def _strip_comments(text: str) -> str:
    return re.sub(r"#[^\n]*", "", text)


def _ids(value: str, source: str, line: int) -> list[str]:
    ids = [token for token in re.split(r"[,\s]+", value) if token]
    for token in ids:
        if not _ID.match(token):
            raise ParseError(source, line, f"bad event id {token!r}")
    return ids


def _pairs(value: str, source: str, line: int) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    for item in (token.strip() for token in value.split(",")):
        if not item:
            continue
        chain = [part.strip() for part in item.split("<")]
        if len(chain) < 2 or not all(_ID.match(part) for part in chain):
            raise ParseError(source, line, f"bad relation {item!r}")
        pairs.extend(zip(chain, chain[1:]))
    return pairs


def _parse_body(name: str, body: str, source: str, line: int) -> RawIposet:
    raw = RawIposet(name=name)
    seen: set[str] = set()
    for section in body.split(";"):
        if not section.strip():
            continue
        key, sep, value = section.partition(":")
        key = key.strip()
        if not sep or key not in SECTIONS:
            raise ParseError(source, line, f"unknown section {section.strip()!r}")
        if key in seen:
            raise ParseError(source, line, f"section {key!r} given twice")
        seen.add(key)
        if key == "events":
            for item in (token.strip() for token in value.split(",")):
                if not item:
                    continue
                event_id, colon, label = (part.strip() for part in item.partition(":"))
                if not colon or not _ID.match(event_id) or not label:
                    raise ParseError(source, line, f"bad event {item!r}")
                raw.events.append((event_id, label))
        elif key in ("source", "target"):
            getattr(raw, key).extend(_ids(value, source, line))
        else:
            getattr(raw, key).extend(_pairs(value, source, line))
    return raw


def iter_blocks(text: str, source: str = "<input>") -> Iterator[tuple[int, int, RawIposet]]:
    """Yield (start, end, raw) for each block in ``text``."""
    text = _strip_comments(text)
    for match in _BLOCK.finditer(text):
        line = _line_of(text, match.start())
        yield match.start(), match.end(), _parse_body(match.group(1), match.group(2), source, line)


def parse_block(text: str, source: str = "<block>") -> tuple[str, Ipomset]:
    blocks = list(iter_blocks(text, source))
    if len(blocks) != 1:
        raise ParseError(source, 1, f"expected one ipomset block, found {len(blocks)}")
    raw = blocks[0][2]
    return raw.name, canonicalize(raw)


def parse_blocks(text: str, source: str = "<input>") -> list[tuple[str, Ipomset]]:
    cleaned = _strip_comments(text)
    blocks = list(iter_blocks(text, source))
    covered = "".join(
        cleaned[end:start]
        for end, start in zip([0] + [b[1] for b in blocks], [b[0] for b in blocks] + [len(cleaned)])
    )
    if covered.strip():
        raise ParseError(source, 1, f"unexpected text outside blocks: {covered.strip()[:40]!r}")
    return [(raw.name, canonicalize(raw)) for _, _, raw in blocks]


def parse_ipomset(text: str, source: str = "<expr>") -> Ipomset:
    """Parse either notation."""
    if text.lstrip().startswith("ipomset"):
        return parse_block(text, source)[1]
    return parse_expression(text, source)


def _block_sections(P: Ipomset) -> list[str]:
    def pairs(rel: frozenset[tuple[int, int]]) -> str:
        return ", ".join(f"{x}<{y}" for x, y in sorted(rel))

    return [
        "events: " + ", ".join(f"{x}:{label}" for x, label in enumerate(P.labels)),
        "source: " + ", ".join(str(x) for x in sorted(P.source)),
        "target: " + ", ".join(str(x) for x in sorted(P.target)),
        "prec: " + pairs(P.prec),
        "evord: " + pairs(P.evord),
    ]


def to_block(P: Ipomset, name: str = "") -> str:
    header = f"ipomset {name} {{" if name else "ipomset {"
    return "\n".join([header, *(f"  {line};" for line in _block_sections(P)), "}"])


def render(P: Ipomset) -> str:
    expression = to_expression(P)
    if expression is not None:
        return expression
    return "ipomset { " + "; ".join(_block_sections(P)) + " }"


# --- JSON -------------------------------------------------------------------


class IpomsetDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    expression: str
    labels: list[str]
    source: list[bool]
    target: list[bool]
    prec: list[list[bool]]
    evord: list[list[bool]]


def to_document(P: Ipomset) -> IpomsetDocument:
    def matrix(rel: frozenset[tuple[int, int]]) -> list[list[bool]]:
        return [[(x, y) in rel for y in range(P.n)] for x in range(P.n)]

    return IpomsetDocument(
        expression=render(P),
        labels=list(P.labels),
        source=[x in P.source for x in range(P.n)],
        target=[x in P.target for x in range(P.n)],
        prec=matrix(P.prec),
        evord=matrix(P.evord),
    )


def from_document(doc: IpomsetDocument) -> Ipomset:
    n = len(doc.labels)

    def pairs(matrix: list[list[bool]]) -> list[tuple[int, int]]:
        return [(x, y) for x in range(n) for y in range(n) if matrix[x][y]]

    return normalize(
        doc.labels,
        (x for x in range(n) if doc.source[x]),
        (x for x in range(n) if doc.target[x]),
        pairs(doc.prec),
        pairs(doc.evord),
    )
