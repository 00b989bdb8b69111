import hypothesis
import pytest

from errors import ParseError
from ipomsets.core import EMPTY
from ipomsets.divisions import enumerate_divisions
from ipomsets.signatures import fin, remove_target_positions, rfin_positions
from ipomsets.steps import glue
from ipomsets.subsumption import refinements, subsumes
from languages.formats import parse_language, to_language_text
from languages.language import LanguageSet, render_set
from languages.quotients import (
    is_swap_invariant,
    prefix_quotient,
    prefix_quotient_family,
    prefixes,
    quotient_key,
    removal_family,
    strong_equiv,
    suffix_quotient,
    suffix_quotient_family,
    suffixes,
    weak_equiv,
)
from tests import oracles
from tests.conftest import expr, exprs
from tests.strategies import ipomsets, languages

corpus = hypothesis.settings(max_examples=25, deadline=None)

NONDET_TABLE = {
    "ε": ("[a∥b]", "ab", "ba", "abc"),
    "a": ("b", "bc"),
    "b": ("a",),
    "ab": ("ε", "c"),
    "[a∥b]": ("ε",),
    "a•": ("[•a∥b]", "•ab", "•abc"),
    "ba•": ("•a",),
    "b•": ("[a∥•b]", "•ba"),
    "ab•": ("•b", "•bc"),
    "[a∥b•]": ("•b",),
    "abc•": ("•c",),
    "[a•∥b•]": ("[•a∥•b]",),
}


class TestLanguageSet:
    def test_closure_of_generators(self, nondet):
        assert nondet.members == exprs("[a∥b]", "ab", "ba", "abc")
        assert nondet.generators == exprs("[a∥b]", "abc")
        assert nondet.alphabet == {"a", "b", "c"}
        assert nondet.is_down_closed()

    def test_contains(self, nondet):
        assert nondet.contains(expr("ba"))
        assert not nondet.contains(expr("bac"))

    def test_missing_refinements(self):
        L = LanguageSet.closed(exprs("[a∥b]"))
        assert L.missing_refinements() == sorted(exprs("ab", "ba"))
        assert not L.is_down_closed()

    def test_render(self, nondet):
        assert str(nondet) == render_set(nondet.members)
        assert str(LanguageSet()) == "{}"


class TestQuotients:
    def test_nondet_table(self, nondet):
        for P, quotient in NONDET_TABLE.items():
            assert prefix_quotient(nondet, expr(P)) == exprs(*quotient), P

    def test_identified_rows(self, nondet):
        assert prefix_quotient(nondet, expr("[a•∥b]")) == prefix_quotient(nondet, expr("ba•"))
        assert prefix_quotient(nondet, expr("ba")) == prefix_quotient(nondet, expr("abc")) == {EMPTY}

    def test_nondet_prefixes(self, nondet):
        assert prefixes(nondet) == exprs(*NONDET_TABLE, "ba", "abc", "[a•∥b]")
        assert len(prefixes(nondet)) == 15

    def test_nondet_suff(self, nondet):
        family = suffix_quotient_family(nondet)
        assert family.cardinality == 13
        assert () in family.values
        assert family.values[quotient_key(exprs("•b"))] == (expr("[a∥b•]"),)

    def test_suffix_quotient(self, nondet):
        assert suffix_quotient(nondet, expr("c")) == {expr("ab")}
        assert suffix_quotient(nondet, EMPTY) == nondet.members
        assert suffix_quotient(nondet, expr("d")) == frozenset()
        assert expr("•bc") in suffixes(nondet)

    def test_pref(self, nondet):
        family = prefix_quotient_family(nondet)
        assert quotient_key(nondet.members) in family.values
        assert () in family.values

    def test_unit_prefix(self, nondet):
        assert prefix_quotient(nondet, EMPTY) == nondet.members

    def test_serial_language(self):
        L = LanguageSet.from_generators(exprs("ab"))
        assert prefixes(L) == exprs("ε", "a", "a•", "ab", "ab•")

    def test_empty_language(self):
        L = LanguageSet()
        assert prefixes(L) == set()
        assert suffix_quotient_family(L).cardinality == 1

    def test_single_event(self):
        family = suffix_quotient_family(LanguageSet.from_generators(exprs("a")))
        assert set(family.values) == {
            quotient_key(exprs("a")),
            quotient_key(exprs("ε")),
            quotient_key(exprs("•a")),
            (),
        }

    @corpus
    @hypothesis.given(languages(), ipomsets(max_events=3, labels="abc"))
    def test_quotients_match_gluing(self, L, R):
        for P in sorted(prefixes(L)) + [R]:
            assert prefix_quotient(L, P) == oracles.prefix_quotient_by_gluing(L, P)

    @corpus
    @hypothesis.given(languages())
    def test_quotients_shrink_along_subsumption(self, L):
        for Q in prefixes(L):
            for P in refinements(Q):
                assert prefix_quotient(L, Q) <= prefix_quotient(L, P)

    @corpus
    @hypothesis.given(languages())
    def test_equal_quotients_survive_extension(self, L):
        by_quotient = {}
        for P in prefixes(L):
            by_quotient.setdefault((quotient_key(prefix_quotient(L, P)), P.target_loset), []).append(P)
        for (_, _), group in by_quotient.items():
            first, *others = group
            extensions = {left for N in prefix_quotient(L, first) for left, _ in enumerate_divisions(N)}
            for Q in others:
                for R in extensions:
                    assert prefix_quotient(L, glue(first, R)) == prefix_quotient(L, glue(Q, R))


class TestEquivalences:
    def test_weak_but_not_strong(self, strongeq):
        aa, ba = expr("aa•"), expr("ba•")
        assert prefix_quotient(strongeq, aa) == prefix_quotient(strongeq, ba) == exprs("•a")
        assert weak_equiv(aa, ba, strongeq)
        assert not strong_equiv(aa, ba, strongeq)
        assert prefix_quotient(strongeq, expr("a")) == exprs("a", "b")
        assert prefix_quotient(strongeq, expr("b")) == exprs("a")

    def test_reflexive(self, strongeq):
        for P in prefixes(strongeq):
            assert strong_equiv(P, P, strongeq)

    def test_signatures_must_agree(self, nondet):
        assert not weak_equiv(expr("a•"), expr("b•"), nondet)

    def test_removal_family_order(self, nondet):
        assert removal_family(expr("ab•"), nondet) == (
            quotient_key(exprs("•b", "•bc")),
            quotient_key(exprs("b", "bc")),
        )

    @corpus
    @hypothesis.given(languages())
    def test_strong_refines_weak(self, L):
        candidates = sorted(prefixes(L))
        for P in candidates:
            for Q in candidates:
                if strong_equiv(P, Q, L):
                    assert weak_equiv(P, Q, L)
                    for size in range(len(rfin_positions(P)) + 1):
                        A = sorted(rfin_positions(P))[:size]
                        assert strong_equiv(remove_target_positions(P, A), remove_target_positions(Q, A), L)


class TestSwapInvariance:
    def test_nondet(self, nondet):
        verdict = is_swap_invariant(nondet)
        assert not verdict.holds
        pairs = {(w.smaller, w.larger): w for w in verdict.witnesses}
        witness = pairs[(expr("ab•"), expr("[a∥b•]"))]
        assert witness.smaller_quotient == quotient_key(exprs("•b", "•bc"))
        assert witness.larger_quotient == quotient_key(exprs("•b"))
        assert (expr("ab"), expr("[a∥b]")) in pairs
        assert verdict.witness == verdict.witnesses[0]
        assert str(witness).startswith("ab• ⊑ [a∥b•] but")

    def test_serial_language(self):
        assert is_swap_invariant(LanguageSet.from_generators(exprs("ab"))).holds

    def test_empty_language(self):
        verdict = is_swap_invariant(LanguageSet())
        assert verdict.holds
        assert verdict.witness is None

    def test_parallel_interfaces(self, det_lang, strongeq):
        assert is_swap_invariant(det_lang).holds
        assert is_swap_invariant(strongeq).holds

    @corpus
    @hypothesis.given(languages())
    def test_matches_pairwise_check(self, L):
        candidates = prefixes(L)
        expected = all(
            prefix_quotient(L, P) == prefix_quotient(L, Q)
            for P in candidates
            for Q in candidates
            if subsumes(P, Q)
        )
        assert is_swap_invariant(L).holds == expected


class TestLanguageFormat:
    def test_generators(self, nondet):
        text = "alphabet: a b c\nmembers:\n[a∥b]\nabc\n"
        assert parse_language(text) == nondet

    def test_closed(self, det_lang):
        assert det_lang.members == det_lang.generators == exprs("ab", "[a•∥b•]")

    def test_blocks(self):
        L = parse_language("members:\nab\nipomset n { events: x:a, y:c ; prec: x<y }\n")
        assert L.members == exprs("ab", "ac")
        assert L.alphabet == {"a", "b", "c"}

    def test_alphabet_violation(self):
        with pytest.raises(ParseError, match="outside the alphabet"):
            parse_language("alphabet: a\nmembers:\nab\n")

    def test_alphabet_override(self):
        L = parse_language("alphabet: a\nmembers:\nab\n", alphabet={"a", "b", "z"})
        assert L.alphabet == {"a", "b", "z"}

    def test_missing_members(self):
        with pytest.raises(ParseError, match="missing members"):
            parse_language("alphabet: a b\n")

    def test_bad_closed_flag(self):
        with pytest.raises(ParseError):
            parse_language("closed: maybe\nmembers:\na\n")

    def test_round_trip(self, nondet, aa_lang):
        assert parse_language(to_language_text(nondet)) == LanguageSet.closed(nondet.members, nondet.alphabet)
        assert parse_language(to_language_text(aa_lang)) == aa_lang

    def test_fin_of_closed_member(self, aa_lang):
        (P,) = aa_lang.members
        assert str(P) == "[•aa•∥•a•]"
        assert fin(P).as_ipomset() == expr("[a•∥•a•]")
