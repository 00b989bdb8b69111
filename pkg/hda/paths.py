"""Paths in an HDA and their event ipomsets."""

from typing import Literal

from pydantic import BaseModel, ConfigDict

from errors import HdaLangError
from hda.automaton import Hda, composite_face
from ipomsets.core import Ipomset
from ipomsets.steps import glue, identity, starter, terminator


class PathStep(BaseModel):
    """An upstep ↗A into ``cell`` (positions of ``cell``) or a downstep ↘A
    into ``cell`` (positions of the previous cell)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["up", "down"]
    positions: frozenset[int]
    cell: str


class Path(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: str
    steps: tuple[PathStep, ...] = ()

    @property
    def cells(self) -> list[str]:
        return [self.start, *(step.cell for step in self.steps)]

    @property
    def end(self) -> str:
        return self.steps[-1].cell if self.steps else self.start

    @property
    def is_sparse(self) -> bool:
        kinds = [step.kind for step in self.steps]
        return all(step.positions for step in self.steps) and all(a != b for a, b in zip(kinds, kinds[1:]))

    def extend(self, step: PathStep) -> "Path":
        return Path(start=self.start, steps=(*self.steps, step))

    def concat(self, other: "Path") -> "Path":
        if other.start != self.end:
            raise HdaLangError(f"cannot concatenate a path ending in {self.end} with one starting in {other.start}")
        return Path(start=self.start, steps=self.steps + other.steps)

    def render(self, X: Hda) -> str:
        parts = [self.start]
        previous = self.start
        for step in self.steps:
            loset = X.ev(step.cell if step.kind == "up" else previous)
            labels = "".join(loset[i] for i in sorted(step.positions)) or "∅"
            parts.append(f"{'↗' if step.kind == 'up' else '↘'}{labels} {step.cell}")
            previous = step.cell
        return " ".join(parts)


def check_path(X: Hda, path: Path) -> None:
    """Raise unless each step matches the faces of ``X``."""
    previous = path.start
    X.cell(previous)
    for k, step in enumerate(path.steps, 1):
        if step.kind == "up":
            ok = composite_face(X, step.cell, 0, step.positions) == previous
        else:
            ok = composite_face(X, previous, 1, step.positions) == step.cell
        if not ok:
            raise HdaLangError(f"step {k} of the path is not a face relation: {previous} to {step.cell}")
        previous = step.cell


def step_ipomset(X: Hda, previous: str, step: PathStep) -> Ipomset:
    if step.kind == "up":
        return starter(X.ev(step.cell), step.positions)
    return terminator(X.ev(previous), step.positions)


def ev_of_path(X: Hda, path: Path) -> Ipomset:
    """The event ipomset: id_{ev(x0)} glued with one starter or terminator
    per step."""
    check_path(X, path)
    P = identity(X.ev(path.start))
    previous = path.start
    for step in path.steps:
        P = glue(P, step_ipomset(X, previous, step))
        previous = step.cell
    return P


def _merge(X: Hda, previous: str, first: PathStep, second: PathStep) -> PathStep:
    if first.kind == "up":
        # first's positions live in first.cell = δ⁰_{second}(second.cell)
        remaining = [i for i in range(len(X.ev(second.cell))) if i not in second.positions]
        moved = {remaining[i] for i in first.positions}
        return PathStep(kind="up", positions=frozenset(moved | second.positions), cell=second.cell)
    # second's positions live in first.cell = δ¹_{first}(previous)
    remaining = [i for i in range(len(X.ev(previous))) if i not in first.positions]
    moved = {remaining[i] for i in second.positions}
    return PathStep(kind="down", positions=frozenset(first.positions | moved), cell=second.cell)


def sparse_normalize(X: Hda, path: Path) -> Path:
    """The sparse path equivalent to ``path``: empty steps are dropped and
    consecutive steps of the same kind merged."""
    check_path(X, path)
    merged: list[tuple[str, PathStep]] = []
    for step in path.steps:
        previous = merged[-1][1].cell if merged else path.start
        if not step.positions:
            continue
        if merged and merged[-1][1].kind == step.kind:
            before, last = merged.pop()
            merged.append((before, _merge(X, before, last, step)))
        else:
            merged.append((previous, step))
    return Path(start=path.start, steps=tuple(step for _, step in merged))
