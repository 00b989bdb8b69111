"""Brute-force reference implementations used to cross-check the library."""

import itertools

from errors import HdaLangError
from ipomsets.core import Ipomset, normalize, restrict
from ipomsets.steps import glue
from languages.language import LanguageSet


def subsumes_by_bijection(P: Ipomset, Q: Ipomset) -> bool:
    """P ⊑ Q by trying every bijection."""
    if P.n != Q.n:
        return False
    for image in itertools.permutations(range(Q.n)):
        if any(P.labels[x] != Q.labels[image[x]] for x in range(P.n)):
            continue
        if {image[x] for x in P.source} != Q.source or {image[x] for x in P.target} != Q.target:
            continue
        if any((x, y) not in P.prec for x in range(P.n) for y in range(P.n) if (image[x], image[y]) in Q.prec):
            continue
        if any(
            (image[x], image[y]) not in Q.evord
            for x, y in P.evord
            if P.concurrent(x, y)
        ):
            continue
        return True
    return False


def divisions_by_partition(M: Ipomset) -> set[tuple[Ipomset, Ipomset]]:
    """Every 3-partition of M's events whose two halves glue back to M."""
    found = set()
    for part in itertools.product(range(3), repeat=M.n):
        left = [x for x in range(M.n) if part[x] != 2]
        right = [x for x in range(M.n) if part[x] != 0]
        shared = [x for x in range(M.n) if part[x] == 1]
        try:
            P = restrict(M, left, [x for x in M.source if x in left], shared)
            Q = restrict(M, right, shared, [x for x in M.target if x in right])
            if glue(P, Q) == M:
                found.add((P, Q))
        except HdaLangError:
            continue
    return found


def refinements_by_orientation(P: Ipomset) -> set[Ipomset]:
    """Orient each concurrent pair of P forwards, backwards or not at all and
    keep the valid results subsumed by P."""
    pairs = [(x, y) for x in range(P.n) for y in range(x + 1, P.n) if P.concurrent(x, y)]
    found = set()
    for choice in itertools.product(range(3), repeat=len(pairs)):
        added = [pair if c == 1 else pair[::-1] for pair, c in zip(pairs, choice) if c]
        try:
            R = normalize(P.labels, P.source, P.target, [*P.prec, *added], P.evord)
        except HdaLangError:
            continue
        if subsumes_by_bijection(R, P):
            found.add(R)
    return found


def prefix_quotient_by_gluing(L: LanguageSet, P: Ipomset) -> set[Ipomset]:
    """{Q | P*Q ∈ L}, with Q ranging over every right half of a member."""
    candidates = {Q for M in L.members for _, Q in divisions_by_partition(M)}
    quotient = set()
    for Q in candidates:
        try:
            if glue(P, Q) in L.members:
                quotient.add(Q)
        except HdaLangError:
            continue
    return quotient
