"""Discrete ipomsets, gluing, and the sparse step decomposition."""

import logging
from collections.abc import Iterable, Sequence
from functools import reduce
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from errors import AxiomViolation, InterfaceMismatch
from ipomsets.core import Ipomset, Loset, normalize, sparse_execution

logger = logging.getLogger(__name__)


def _discrete(U: Loset, source: Iterable[int], target: Iterable[int]) -> Ipomset:
    n = len(U)
    chain = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return normalize(U, source, target, (), chain)


def _check_positions(U: Loset, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(A)
    for i in A:
        if not 0 <= i < len(U):
            raise AxiomViolation(f"position {i} is outside loset {''.join(U) or 'ε'}")
    return A


def identity(U: Loset) -> Ipomset:
    U = tuple(U)
    return _discrete(U, range(len(U)), range(len(U)))


def starter(U: Loset, A: Iterable[int]) -> Ipomset:
    """U↑A: the events at positions A start, the rest are already active."""
    U = tuple(U)
    A = _check_positions(U, A)
    return _discrete(U, (i for i in range(len(U)) if i not in A), range(len(U)))


def terminator(U: Loset, A: Iterable[int]) -> Ipomset:
    """U↓A: the events at positions A terminate."""
    U = tuple(U)
    A = _check_positions(U, A)
    return _discrete(U, range(len(U)), (i for i in range(len(U)) if i not in A))


class StarterTerminator(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["starter", "terminator"]
    loset: Loset
    active: frozenset[int]

    @model_validator(mode="after")
    def _positions_in_range(self) -> "StarterTerminator":
        _check_positions(self.loset, self.active)
        return self

    @property
    def before(self) -> Loset:
        """Loset active before the step."""
        if self.kind == "terminator":
            return self.loset
        return tuple(l for i, l in enumerate(self.loset) if i not in self.active)

    @property
    def after(self) -> Loset:
        if self.kind == "starter":
            return self.loset
        return tuple(l for i, l in enumerate(self.loset) if i not in self.active)

    def as_ipomset(self) -> Ipomset:
        if self.kind == "starter":
            return starter(self.loset, self.active)
        return terminator(self.loset, self.active)

    def __str__(self) -> str:
        arrow = "↑" if self.kind == "starter" else "↓"
        marked = "".join(self.loset[i] for i in sorted(self.active))
        return f"({''.join(self.loset) or 'ε'}){arrow}{marked or '∅'}"


class StepSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    initial_loset: Loset = ()
    steps: tuple[StarterTerminator, ...] = ()

    @model_validator(mode="after")
    def _steps_compose(self) -> "StepSequence":
        current = self.initial_loset
        for step in self.steps:
            if step.before != current:
                raise InterfaceMismatch(current, step.before)
            current = step.after
        return self

    @property
    def is_sparse(self) -> bool:
        kinds = [step.kind for step in self.steps]
        nonempty = all(step.active for step in self.steps)
        return nonempty and all(k1 != k2 for k1, k2 in zip(kinds, kinds[1:]))

    def compose(self) -> Ipomset:
        return reduce(glue, (step.as_ipomset() for step in self.steps), identity(self.initial_loset))

    def __str__(self) -> str:
        if not self.steps:
            return f"id({''.join(self.initial_loset) or 'ε'})"
        return " · ".join(str(step) for step in self.steps)


def glue(P: Ipomset, Q: Ipomset) -> Ipomset:
    """Gluing composition P*Q along the unique isomorphism T_P → S_Q."""
    targets = P.loset_order(P.target)
    sources = Q.loset_order(Q.source)
    left = tuple(P.labels[x] for x in targets)
    right = tuple(Q.labels[y] for y in sources)
    if left != right:
        raise InterfaceMismatch(left, right)

    # Q's events: interface events map onto P's targets, the rest follow P's.
    to_glued: dict[int, int] = dict(zip(sources, targets))
    fresh = P.n
    for y in range(Q.n):
        if y not in to_glued:
            to_glued[y] = fresh
            fresh += 1
    labels = list(P.labels) + [""] * (fresh - P.n)
    for y, z in to_glued.items():
        labels[z] = Q.labels[y]

    p_only = [x for x in range(P.n) if x not in P.target]
    q_only = [to_glued[y] for y in range(Q.n) if y not in Q.source]
    prec = set(P.prec)
    prec.update((to_glued[x], to_glued[y]) for x, y in Q.prec)
    prec.update((x, y) for x in p_only for y in q_only)
    evord = set(P.evord)
    evord.update((to_glued[x], to_glued[y]) for x, y in Q.evord)
    return normalize(
        labels,
        P.source,
        (to_glued[y] for y in Q.target),
        prec,
        evord,
    )


def glue_all(parts: Sequence[Ipomset]) -> Ipomset:
    if not parts:
        raise ValueError("glue_all needs at least one ipomset")
    return reduce(glue, parts)


def _to_step(P: Ipomset, kind: str, loset: tuple[int, ...], active: frozenset[int]) -> StarterTerminator:
    return StarterTerminator(
        kind=kind,
        loset=tuple(P.labels[x] for x in loset),
        active=frozenset(i for i, x in enumerate(loset) if x in active),
    )


def sparse_decomposition(P: Ipomset) -> StepSequence:
    initial, steps = sparse_execution(P.n, P.source, P.target, P.prec, P.evord)
    return StepSequence(
        initial_loset=tuple(P.labels[x] for x in initial),
        steps=tuple(_to_step(P, *step) for step in steps),
    )


def event_steps(P: Ipomset) -> dict[int, tuple[int, int | None]]:
    """For each event of ``P``, the indices of the steps of the sparse
    decomposition that start and terminate it (0 for sources, None for
    targets)."""
    initial, steps = sparse_execution(P.n, P.source, P.target, P.prec, P.evord)
    begin = {x: 0 for x in initial}
    end: dict[int, int | None] = {x: None for x in P.target}
    for k, step in enumerate(steps, 1):
        for x in step.active:
            if step.kind == "starter":
                begin[x] = k
            else:
                end[x] = k
    return {x: (begin[x], end[x]) for x in range(P.n)}
