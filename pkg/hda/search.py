"""Searches over HDAs: essential cells, membership, path division and
bounded language enumeration."""

import itertools
import logging
from collections import deque
from collections.abc import Iterable, Iterator

from pydantic import BaseModel, ConfigDict

from hda.automaton import Hda, composite_face, lower_cofaces, mixed_face, upper_cofaces
from hda.paths import Path, PathStep, ev_of_path
from ipomsets.core import Ipomset
from ipomsets.steps import glue, identity, sparse_decomposition, starter, terminator

logger = logging.getLogger(__name__)


class EssentialReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    accessible: frozenset[str]
    coaccessible: frozenset[str]
    essential: frozenset[str]
    closure: frozenset[str]


def _nonempty_subsets(n: int) -> Iterator[frozenset[int]]:
    for size in range(1, n + 1):
        for A in itertools.combinations(range(n), size):
            yield frozenset(A)


def _sorted_cofaces(X: Hda, cell_id: str, lower: bool = True) -> list[tuple[str, frozenset[int]]]:
    cofaces = lower_cofaces(X, cell_id) if lower else upper_cofaces(X, cell_id)
    return sorted(cofaces, key=lambda item: (item[0], sorted(item[1])))


def _reach(seeds: Iterable[str], successors) -> frozenset[str]:
    seen = set(seeds)
    queue = deque(sorted(seen))
    while queue:
        x = queue.popleft()
        for y in successors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def accessible(X: Hda) -> frozenset[str]:
    def successors(x: str) -> Iterator[str]:
        cell = X.cell(x)
        yield from cell.upper
        yield from (y for y, _ in lower_cofaces(X, x))

    return _reach(X.start, successors)


def coaccessible(X: Hda) -> frozenset[str]:
    def predecessors(y: str) -> Iterator[str]:
        cell = X.cell(y)
        yield from cell.lower
        yield from (x for x, _ in upper_cofaces(X, y))

    return _reach(X.accept, predecessors)


def essential_report(X: Hda) -> EssentialReport:
    acc = accessible(X)
    coacc = coaccessible(X)
    essential = acc & coacc
    closure: set[str] = set()
    for x in essential:
        dim = X.cell(x).dim
        # every pair of disjoint position sets (A, B)
        for assignment in itertools.product((None, 0, 1), repeat=dim):
            A = [i for i, kind in enumerate(assignment) if kind == 0]
            B = [i for i, kind in enumerate(assignment) if kind == 1]
            closure.add(mixed_face(X, x, A, B))
    logger.debug(
        "%s: %d accessible, %d coaccessible, %d essential",
        X.name or "hda", len(acc), len(coacc), len(essential),
    )
    return EssentialReport(
        accessible=acc, coaccessible=coacc, essential=essential, closure=frozenset(closure)
    )


def ess_closure(X: Hda) -> Hda:
    """The smallest sub-HDA containing every essential cell."""
    return X.sub_hda(essential_report(X).closure)


def _follow(X: Hda, P: Ipomset, sources: Iterable[str]) -> dict[str, Path]:
    """Cells reachable from ``sources`` by a path with event ipomset ``P``,
    each with one witness path."""
    sequence = sparse_decomposition(P)
    frontier = {x: Path(start=x) for x in sorted(sources) if X.ev(x) == sequence.initial_loset}
    for step in sequence.steps:
        following: dict[str, Path] = {}
        for x, path in sorted(frontier.items()):
            if step.kind == "starter":
                for y, A in _sorted_cofaces(X, x):
                    if A == step.active and X.ev(y) == step.loset and y not in following:
                        following[y] = path.extend(PathStep(kind="up", positions=A, cell=y))
            else:
                y = composite_face(X, x, 1, step.active)
                if y not in following:
                    following[y] = path.extend(PathStep(kind="down", positions=step.active, cell=y))
        frontier = following
        if not frontier:
            break
    return frontier


class MembershipVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    accepted: bool
    ipomset: str
    path: Path | None = None


def member(X: Hda, P: Ipomset) -> MembershipVerdict:
    """Decide P ∈ Lang(X), returning an accepting witness path."""
    ends = _follow(X, P, X.start)
    for end in sorted(ends):
        if end in X.accept:
            return MembershipVerdict(accepted=True, ipomset=str(P), path=ends[end])
    return MembershipVerdict(accepted=False, ipomset=str(P))


def reached(X: Hda, P: Ipomset) -> frozenset[str]:
    """Cells at the end of some path from a start cell with event ipomset ``P``."""
    return frozenset(_follow(X, P, X.start))


def find_path(X: Hda, P: Ipomset, source: str, target: str) -> Path | None:
    """A path from ``source`` to ``target`` with event ipomset ``P``."""
    return _follow(X, P, [source]).get(target)


def divide_path(X: Hda, path: Path, left: Ipomset, right: Ipomset) -> tuple[Path, Path] | None:
    """Split ``path`` with ev(path) = left*right into two paths with event
    ipomsets ``left`` and ``right`` meeting in a common cell."""
    if glue(left, right) != ev_of_path(X, path):
        return None
    for middle, alpha in sorted(_follow(X, left, [path.start]).items()):
        beta = find_path(X, right, middle, path.end)
        if beta is not None:
            return alpha, beta
    return None


def _walk(X: Hda, max_steps: int) -> Iterator[tuple[Path, Ipomset]]:
    def extend(path: Path, P: Ipomset, last: str | None) -> Iterator[tuple[Path, Ipomset]]:
        x = path.end
        if x in X.accept:
            yield path, P
        if len(path.steps) >= max_steps:
            return
        if last != "up":
            for y, A in _sorted_cofaces(X, x):
                step = PathStep(kind="up", positions=A, cell=y)
                yield from extend(path.extend(step), glue(P, starter(X.ev(y), A)), "up")
        if last != "down":
            U = X.ev(x)
            for B in _nonempty_subsets(len(U)):
                step = PathStep(kind="down", positions=B, cell=composite_face(X, x, 1, B))
                yield from extend(path.extend(step), glue(P, terminator(U, B)), "down")

    for x in sorted(X.start):
        yield from extend(Path(start=x), identity(X.ev(x)), None)


def sparse_accepting_paths(X: Hda, max_steps: int) -> list[Path]:
    """Sparse accepting paths with at most ``max_steps`` steps."""
    return [path for path, _ in _walk(X, max_steps)]


def enumerate_language(X: Hda, max_steps: int) -> set[Ipomset]:
    """Event ipomsets of all sparse accepting paths of at most
    ``max_steps`` steps."""
    language = {P for _, P in _walk(X, max_steps)}
    logger.debug("%s: %d ipomsets within %d steps", X.name or "hda", len(language), max_steps)
    return language
