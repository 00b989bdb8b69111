"""The ``.hda`` file format and DOT output.

::

    hda square {
      cell v : [] ;
      cell e : [a] d0(1)=v d1(1)=w ;
      cell q : [a b] d0(1)=g d1(1)=h d0(2)=e d1(2)=f ;
      start: v ;
      accept: h, y ;
    }

Labels of a cell are listed in event order; face positions are 1-based.
"""

import re
from pathlib import Path

from errors import ParseError
from hda.automaton import Cell, Hda

_HDA = re.compile(r"^\s*hda\s*([A-Za-z0-9_.\-]*)\s*\{(.*)\}\s*$", re.S)
_CELL = re.compile(r"^cell\s+([A-Za-z0-9_.\-]+)\s*:\s*\[([^\]]*)\](.*)$", re.S)
_FACE = re.compile(r"d([01])\((\d+)\)\s*=\s*([A-Za-z0-9_.\-]+)")
_SET = re.compile(r"^(start|accept)\s*:(.*)$", re.S)


def parse_hda(text: str, source: str = "<hda>") -> Hda:
    text = re.sub(r"#[^\n]*", "", text)
    match = _HDA.match(text)
    if not match:
        raise ParseError(source, 1, "expected 'hda NAME { ... }'")
    name, body = match.groups()
    offset = match.start(2)

    cells: list[Cell] = []
    sets: dict[str, list[str]] = {"start": [], "accept": []}
    position = offset
    for statement in body.split(";"):
        line = text.count("\n", 0, position) + 1 + statement[: len(statement) - len(statement.lstrip())].count("\n")
        position += len(statement) + 1
        statement = statement.strip()
        if not statement:
            continue
        if cell := _CELL.match(statement):
            cells.append(_parse_cell(cell, source, line))
        elif chosen := _SET.match(statement):
            sets[chosen.group(1)].extend(token for token in re.split(r"[,\s]+", chosen.group(2)) if token)
        else:
            raise ParseError(source, line, f"cannot parse {statement[:40]!r}")
    return Hda(name=name, cells=tuple(cells), start=frozenset(sets["start"]), accept=frozenset(sets["accept"]))


def _parse_cell(match: re.Match, source: str, line: int) -> Cell:
    cell_id, labels, rest = match.groups()
    loset = tuple(token for token in re.split(r"[,\s]+", labels) if token)
    faces: dict[tuple[int, int], str] = {}
    for kind, position, face in _FACE.findall(rest):
        key = (int(kind), int(position) - 1)
        if key in faces:
            raise ParseError(source, line, f"cell {cell_id}: d{kind}({position}) given twice")
        if not 0 <= key[1] < len(loset):
            raise ParseError(source, line, f"cell {cell_id}: face position {position} out of range")
        faces[key] = face
    if _FACE.sub("", rest).strip():
        raise ParseError(source, line, f"cell {cell_id}: cannot parse {rest.strip()!r}")
    missing = [f"d{k}({i + 1})" for k in (0, 1) for i in range(len(loset)) if (k, i) not in faces]
    if missing:
        raise ParseError(source, line, f"cell {cell_id}: missing faces {', '.join(missing)}")
    return Cell(
        id=cell_id,
        loset=loset,
        lower=tuple(faces[(0, i)] for i in range(len(loset))),
        upper=tuple(faces[(1, i)] for i in range(len(loset))),
    )


def load_hda(path: str | Path) -> Hda:
    path = Path(path)
    return parse_hda(path.read_text(encoding="utf-8"), str(path))


def to_hda_text(X: Hda) -> str:
    lines = [f"hda {X.name} {{" if X.name else "hda {"]
    for cell in sorted(X.cells, key=lambda c: (c.dim, c.id)):
        faces = " ".join(
            f"d0({i + 1})={cell.lower[i]} d1({i + 1})={cell.upper[i]}" for i in range(cell.dim)
        )
        lines.append(f"  cell {cell.id} : [{' '.join(cell.loset)}]" + (f" {faces}" if faces else "") + " ;")
    lines.append(f"  start: {', '.join(sorted(X.start))} ;")
    lines.append(f"  accept: {', '.join(sorted(X.accept))} ;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(X: Hda, labels: dict[str, str] | None = None) -> str:
    """Graphviz text: vertices and edges as a graph, each square as a
    shaded cluster with a comment naming its boundary edges, higher cells as
    comments only. ``labels`` optionally replaces cell ids in captions."""
    labels = labels or {}

    def caption(cell: Cell) -> str:
        text = labels.get(cell.id, cell.id)
        if cell.id in X.start:
            text = "⊥ " + text
        if cell.id in X.accept:
            text += " ⊤"
        return text

    nodes, edges, clusters, comments = [], [], [], []
    for cell in sorted(X.cells, key=lambda c: (c.dim, c.id)):
        if cell.dim == 0:
            shape = "doublecircle" if cell.id in X.accept else "circle"
            nodes.append(f"{_quote(cell.id)} [shape={shape}, label={_quote(caption(cell))}];")
            if cell.id in X.start:
                nodes.append(f"{_quote('__start_' + cell.id)} [shape=point];")
                edges.append(f"{_quote('__start_' + cell.id)} -> {_quote(cell.id)};")
        elif cell.dim == 1:
            style = ", penwidth=2" if cell.id in X.accept or cell.id in X.start else ""
            text = f"{caption(cell)}: {cell.loset[0]}"
            edges.append(f"{_quote(cell.lower[0])} -> {_quote(cell.upper[0])} [label={_quote(text)}{style}];")
        elif cell.dim == 2:
            boundary = " ".join(
                f"d{k}({i + 1})={(cell.lower, cell.upper)[k][i]}" for i in range(2) for k in (0, 1)
            )
            clusters.append(
                "\n\t".join([
                    f"/* square {cell.id} [{' '.join(cell.loset)}]: {boundary} */",
                    f"subgraph {_quote('cluster_' + cell.id)} {{",
                    "\tstyle=filled; color=grey90;",
                    f"\tlabel={_quote(caption(cell) + ' [' + ' '.join(cell.loset) + ']')};",
                    f"\t{_quote(cell.id)} [shape=box, style=filled, fillcolor=grey80, label={_quote(labels.get(cell.id, cell.id))}];",
                    "}",
                ])
            )
        else:
            comments.append(f"/* cell {cell.id} [{' '.join(cell.loset)}] of dimension {cell.dim} */")

    out = [f"digraph {_quote(X.name or 'hda')} {{", "\trankdir=LR;"]
    for group in (nodes, edges, clusters, comments):
        if group:
            out.append("\n\t" + "\n\t".join(group))
    out.append("}")
    return "\n".join(out) + "\n"
