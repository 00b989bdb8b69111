import itertools

import hypothesis
import hypothesis.strategies as strat

from ipomsets.core import Ipomset, normalize
from ipomsets.divisions import enumerate_divisions
from ipomsets.intervals import from_intervals, interval_representation
from ipomsets.signatures import remove_target_positions, rfin_positions
from ipomsets.steps import glue, identity, sparse_decomposition, starter, terminator
from ipomsets.subsumption import refinements, subsumes
from tests import oracles
from tests.strategies import ipomsets

laws = hypothesis.settings(max_examples=60, deadline=None)
oracle_laws = hypothesis.settings(max_examples=30, deadline=None)


def permuted(P: Ipomset, order: list[int]) -> Ipomset:
    """The same iposet with its events listed in ``order``."""
    new = {old: i for i, old in enumerate(order)}
    return normalize(
        [P.labels[old] for old in order],
        [new[x] for x in P.source],
        [new[x] for x in P.target],
        [(new[x], new[y]) for x, y in P.prec],
        [(new[x], new[y]) for x, y in P.evord],
    )


def positions_after_removal(kept: int, removed: frozenset[int], positions) -> set[int]:
    """Renumber positions of a loset of length ``kept`` after dropping ``removed``."""
    remaining = [i for i in range(kept) if i not in removed]
    return {remaining.index(i) for i in positions}


@laws
@hypothesis.given(ipomsets())
def test_canonical_form_is_idempotent(P):
    assert normalize(P.labels, P.source, P.target, P.prec, P.evord) == P


@laws
@hypothesis.given(ipomsets(), strat.randoms())
def test_canonical_form_ignores_event_numbering(P, random):
    order = list(range(P.n))
    random.shuffle(order)
    assert permuted(P, order) == P


@laws
@hypothesis.given(ipomsets())
def test_sparse_decomposition_recomposes(P):
    sequence = sparse_decomposition(P)
    assert sequence.is_sparse
    assert sequence.initial_loset == P.source_loset
    assert sequence.compose() == P


@laws
@hypothesis.given(ipomsets())
def test_interval_round_trip(P):
    assert from_intervals(interval_representation(P)) == P


@laws
@hypothesis.given(ipomsets())
def test_identities_are_units(P):
    assert glue(identity(P.source_loset), P) == P
    assert glue(P, identity(P.target_loset)) == P


@laws
@hypothesis.given(ipomsets(max_events=4), strat.data())
def test_gluing_is_associative(M, data):
    left, rest = data.draw(strat.sampled_from(enumerate_divisions(M)))
    middle, right = data.draw(strat.sampled_from(enumerate_divisions(rest)))
    assert glue(glue(left, middle), right) == glue(left, glue(middle, right)) == M


@laws
@hypothesis.given(ipomsets(max_events=4))
def test_subsumption_is_a_partial_order(P):
    below = refinements(P)
    assert P in below
    for Q in below:
        assert subsumes(Q, P)
        assert refinements(Q) <= below
        if subsumes(P, Q):
            assert P == Q


@oracle_laws
@hypothesis.given(ipomsets(max_events=4))
def test_refinements_match_oracle(P):
    assert refinements(P) == oracles.refinements_by_orientation(P)


@oracle_laws
@hypothesis.given(ipomsets(max_events=4), ipomsets(max_events=4))
def test_subsumption_matches_oracle(P, Q):
    assert subsumes(P, Q) == oracles.subsumes_by_bijection(P, Q)
    for R in refinements(P):
        assert subsumes(R, P) == oracles.subsumes_by_bijection(R, P)


@oracle_laws
@hypothesis.given(ipomsets(max_events=5))
def test_divisions_match_oracle(M):
    assert set(enumerate_divisions(M)) == oracles.divisions_by_partition(M)


@laws
@hypothesis.given(ipomsets(max_events=4))
def test_reinserting_removed_targets_subsumes(P):
    positions = sorted(rfin_positions(P))
    for size in range(len(positions) + 1):
        for A in itertools.combinations(positions, size):
            rebuilt = glue(remove_target_positions(P, A), starter(P.target_loset, A))
            assert subsumes(rebuilt, P)


@laws
@hypothesis.given(strat.lists(strat.sampled_from("ab"), max_size=4), strat.data())
def test_terminators_compose(U, data):
    U = tuple(U)
    B = data.draw(strat.sets(strat.sampled_from(range(len(U))))) if U else set()
    rest = [i for i in range(len(U)) if i not in B]
    A = data.draw(strat.sets(strat.sampled_from(rest))) if rest else set()
    remaining = tuple(U[i] for i in rest)
    second = positions_after_removal(len(U), frozenset(B), A)
    assert glue(terminator(U, B), terminator(remaining, second)) == terminator(U, A | B)


@laws
@hypothesis.given(ipomsets(max_events=4), strat.data())
def test_removal_commutes_with_termination(P, data):
    U = P.target_loset
    removable = sorted(rfin_positions(P))
    A = data.draw(strat.sets(strat.sampled_from(removable))) if removable else set()
    others = [i for i in range(len(U)) if i not in A]
    B = data.draw(strat.sets(strat.sampled_from(others))) if others else set()

    terminated = glue(P, terminator(U, B))
    left = remove_target_positions(terminated, positions_after_removal(len(U), frozenset(B), A))

    removed = remove_target_positions(P, A)
    kept = tuple(U[i] for i in others)
    right = glue(removed, terminator(kept, positions_after_removal(len(U), frozenset(A), B)))
    assert left == right
