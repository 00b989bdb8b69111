import hypothesis
import hypothesis.strategies as strat

from hda.determinism import is_deterministic
from hda.search import accessible, ess_closure, essential_report, find_path, member, reached
from ipomsets.divisions import enumerate_divisions
from languages.quotients import prefixes
from mn.construction import build_mn, classify
from mn.verify import determinism_agreement, verify_mn
from tests.conftest import mn_shape
from tests.strategies import languages

mn_laws = hypothesis.settings(max_examples=50, deadline=None)


@mn_laws
@hypothesis.given(languages())
def test_mn_accepts_exactly_the_language(L):
    M = build_mn(L)
    report = verify_mn(L, M)
    assert report.valid, report.problems
    assert report.language_ok, (report.missing, report.extra)
    assert report.essential_ok, report.essential_mismatch


@mn_laws
@hypothesis.given(languages())
def test_determinism_matches_swap_invariance(L):
    agreement = determinism_agreement(L, build_mn(L))
    assert agreement.agrees, agreement


@mn_laws
@hypothesis.given(languages())
def test_one_essential_cell_per_class(L):
    M = build_mn(L)
    classes = {classify(P, L) for P in prefixes(L)}
    assert len(M.essential_cells()) == len(classes)


@mn_laws
@hypothesis.given(languages(max_generators=2))
def test_essential_closure_accepts_the_members(L):
    X = ess_closure(build_mn(L).hda)
    for P in L.members:
        assert member(X, P).accepted


@mn_laws
@hypothesis.given(languages(), strat.randoms(use_true_random=False))
def test_discovery_order_does_not_matter(L, rng):
    shuffled = build_mn(L, order=lambda found: rng.sample(sorted(found), len(found)))
    assert mn_shape(shuffled, L) == mn_shape(build_mn(L), L)


@mn_laws
@hypothesis.given(languages())
def test_subsidiary_cells_are_never_accessible(L):
    M = build_mn(L)
    subsidiary = {cell.id for cell in M.cells if cell.kind == "subsidiary"}
    assert not subsidiary & accessible(M.hda)


@mn_laws
@hypothesis.given(languages(max_generators=2))
def test_paths_between_classes(L):
    M = build_mn(L)
    for whole in L.members:
        for N, P in enumerate_divisions(whole):
            assert find_path(M.hda, P, M.cell_of(N).id, M.cell_of(whole).id) is not None, (N, P)


@mn_laws
@hypothesis.given(languages())
def test_deterministic_automata_reach_one_cell(L):
    M = build_mn(L)
    if not is_deterministic(M.hda).holds:
        return
    essential = essential_report(M.hda).essential
    for P in prefixes(L):
        assert reached(M.hda, P) & essential == {M.cell_of(P).id}, P


@mn_laws
@hypothesis.given(languages())
def test_start_and_accept_cells(L):
    M = build_mn(L)
    assert {M.cell(cell_id).loset for cell_id in M.hda.start} == {P.source_loset for P in L.members}
    for cell_id in M.hda.accept:
        assert all(P in L.members for P in M.cell(cell_id).representatives)
