import itertools

import pytest

from tenhundred.morphology import (
    EXTRA_WORDS,
    Rule,
    analyze,
    apply_suffix,
    check_token,
    closure,
    derive_forms,
    edit_distance,
    suggest,
)
from tenhundred.morphology import DomainError


def rules_of(derivations):
    return {int(d.rule) for d in derivations}


class TestApplySuffix:
    @pytest.mark.parametrize(
        "stem,suffix,expected",
        [
            # attested forms
            ("carry", "er", "carrier"),
            ("fast", "est", "fastest"),
            ("point", "y", "pointy"),
            ("talk", "ing", "talking"),
            ("talk", "ed", "talked"),
            ("normal", "ly", "normally"),
            ("thick", "ness", "thickness"),
            ("color", "ful", "colorful"),
            # e-drop and y->i
            ("name", "ed", "named"),
            ("make", "ing", "making"),
            ("carry", "s", "carries"),
            ("carry", "ed", "carried"),
            ("happy", "ness", "happiness"),
            ("happy", "ly", "happily"),
            ("easy", "ly", "easily"),
            ("large", "er", "larger"),
            ("noise", "y", "noisy"),
            # sibilants and final o
            ("push", "s", "pushes"),
            ("pass", "s", "passes"),
            ("box", "s", "boxes"),
            ("go", "s", "goes"),
            ("do", "s", "does"),
            ("play", "s", "plays"),
            # doubling comes from the bundled list
            ("run", "ing", "running"),
            ("stop", "ed", "stopped"),
            ("big", "er", "bigger"),
            ("sun", "y", "sunny"),
            ("begin", "ing", "beginning"),
            ("visit", "ed", "visited"),
            # -ing guards
            ("die", "ing", "dying"),
            ("tie", "ing", "tying"),
            ("see", "ing", "seeing"),
            ("be", "ing", "being"),
            ("agree", "ing", "agreeing"),
            ("agree", "ed", "agreed"),
            # -ly after -le and -ll
            ("simple", "ly", "simply"),
            ("full", "ly", "fully"),
        ],
    )
    def test_orthography(self, stem, suffix, expected):
        assert apply_suffix(stem, suffix) == expected

    def test_unknown_suffix_rejected(self):
        with pytest.raises(ValueError):
            apply_suffix("talk", "izzle")


class TestDeriveForms:
    def test_noun_verb_pair_and_deduced_plural(self, reference):
        think = reference.get("think")
        surfaces = {d.surface for d in derive_forms(think, reference)}
        assert {"thought", "thoughts"} <= surfaces

    def test_pronoun_variants(self, reference):
        we = reference.get("we")
        assert {d.surface for d in derive_forms(we, reference)} == {"we", "us"}
        our = reference.get("our")
        assert "ours" in {d.surface for d in derive_forms(our, reference)}

    def test_adjective_verb_pair_with_conjugations(self, reference):
        low = reference.get("low")
        surfaces = {d.surface for d in derive_forms(low, reference)}
        assert {"lower", "lowering", "lowered"} <= surfaces

    def test_determiner_gets_rule_one_only(self, reference):
        the = reference.get("the")
        derivations = derive_forms(the, reference)
        assert {(d.surface, int(d.rule)) for d in derivations} == {("the", 1)}

    def test_irregular_overrides_regular_orthography(self, reference):
        tooth = reference.get("tooth")
        surfaces = {d.surface for d in derive_forms(tooth, reference)}
        assert "teeth" in surfaces
        assert "tooths" not in surfaces
        think = reference.get("think")
        assert "thinked" not in {d.surface for d in derive_forms(think, reference)}

    def test_foreign_lexeme_rejected(self, reference, toy):
        with pytest.raises(DomainError):
            derive_forms(toy.get("talk"), reference)

    def test_irregular_forms_differ_from_regular_orthography(self, reference):
        # IrregularForm invariant, checked over the whole shipped table
        inflectional = {
            "past": "ed",
            "past-participle": "ed",
            "present-participle": "ing",
            "third-singular": "s",
            "plural": "s",
            "comparative": "er",
            "superlative": "est",
        }
        for form in reference.irregular_forms:
            kind = form.kind
            if kind not in inflectional:
                continue
            regular = {
                apply_suffix(form.root, suffix) for suffix in inflectional.values()
            }
            assert form.form not in regular, form


class TestAnalyze:
    def test_ambiguous_s_form(self, reference):
        derivations = analyze("names", reference)
        tagged = {(d.root_surface, int(d.rule)) for d in derivations}
        assert tagged == {("name", 2), ("name", 4)}

    def test_ambiguous_er_form(self, reference):
        derivations = analyze("cooler", reference)
        tagged = {(d.root_surface, int(d.rule)) for d in derivations}
        assert tagged == {("cool", 3), ("cool", 5)}

    def test_irregular_comparative(self, reference):
        derivations = analyze("worse", reference)
        assert {(d.root_surface, int(d.rule), d.irregular) for d in derivations} == {
            ("bad", 5, True)
        }

    def test_unlisted_root(self, reference):
        assert analyze("xylophone", reference) == frozenset()

    def test_empty_surface_rejected(self, reference):
        with pytest.raises(ValueError):
            analyze("", reference)

    def test_us_is_the_rule_nine_pronoun(self, reference):
        # "US" case-folds to the pronoun; no proper-noun treatment
        derivations = analyze("us", reference)
        assert {(d.root_surface, int(d.rule)) for d in derivations} == {("we", 9)}


class TestCheckToken:
    def test_colorful_allowed_by_ful_rule(self, reference):
        result = check_token("colorful", reference)
        assert result.verdict == "allowed"
        assert rules_of(result.derivations) == {6}

    def test_mad_is_extra(self, reference):
        result = check_token("mad", reference)
        assert result.verdict == "extra"
        assert rules_of(result.derivations) == {int(Rule.EXTRA)}
        assert result.suggestions

    def test_exactly_the_six_extra_words(self, reference):
        assert EXTRA_WORDS == {"some", "mad", "hat", "apart", "rid", "worth"}
        for word in EXTRA_WORDS:
            assert check_token(word, reference).verdict == "extra"

    def test_verdicts_partition(self, reference):
        for word in ["the", "things", "mad", "spaceship", "xyzzy", "tv"]:
            result = check_token(word, reference)
            assert result.verdict in ("allowed", "extra", "rejected")
            if result.verdict == "allowed":
                assert result.derivations and not result.suggestions
            elif result.verdict == "rejected":
                assert not result.derivations and result.suggestions is not None

    def test_spaceship_rejected_with_oracle_ranked_suggestions(self, reference):
        result = check_token("spaceship", reference)
        assert result.verdict == "rejected"
        oracle = suggestion_oracle("spaceship", reference, limit=5)
        assert list(result.suggestions) == oracle
        assert "space" in result.suggestions


def dp_distance(a, b):
    # independent of the package's banded implementation
    rows = [list(range(len(b) + 1))]
    for i, ca in enumerate(a, 1):
        row = [i]
        for j, cb in enumerate(b, 1):
            row.append(min(rows[-1][j] + 1, row[-1] + 1, rows[-1][j - 1] + (ca != cb)))
        rows.append(row)
    return rows[-1][-1]


def suggestion_oracle(surface, word_list, limit):
    cl = closure(word_list)
    scored = sorted(
        (dp_distance(surface, candidate), cl.rank(candidate), candidate)
        for candidate in cl.index
    )
    return [candidate for _, _, candidate in scored[:limit]]


class TestSuggestions:
    @pytest.mark.parametrize("word", ["mad", "hat", "shipp", "boatt", "televisio"])
    def test_matches_exhaustive_oracle(self, reference, word):
        assert list(suggest(word, reference, limit=5)) == suggestion_oracle(
            word, reference, 5
        )

    def test_edit_distance_agrees_with_dp(self):
        words = ["", "a", "boat", "boot", "space", "spaceship", "carry", "carrier"]
        for a, b in itertools.product(words, repeat=2):
            assert edit_distance(a, b) == dp_distance(a, b)

    def test_cutoff_short_circuits(self):
        assert edit_distance("aaaa", "bbbbbbbb", cutoff=2) == 3


class TestClosure:
    def test_toy_closure_matches_hand_enumeration(self, toy):
        # {talk: verb, thing: noun, good: adjective}, no irregular table
        expected = {
            "talk": {("talk", 1)},
            "talks": {("talk", 2)},
            "talked": {("talk", 2)},
            "talking": {("talk", 2)},
            "talker": {("talk", 3)},
            "thing": {("thing", 1)},
            "things": {("thing", 4)},
            "thingy": {("thing", 6)},
            "good": {("good", 1)},
            "gooder": {("good", 5)},
            "goodest": {("good", 5)},
            "goodly": {("good", 7)},
            "goodness": {("good", 8)},
        }
        cl = closure(toy)
        actual = {
            surface: {(d.root_surface, int(d.rule)) for d in derivations}
            for surface, derivations in cl.items()
        }
        assert actual == expected

    def test_closure_larger_than_list(self, reference):
        assert len(closure(reference)) > reference.size

    def test_analyze_equals_closure_lookup(self, reference):
        cl = closure(reference)
        for surface in ["things", "cooler", "worse", "talking"]:
            assert analyze(surface, reference) == cl.derivations(surface)

    def test_every_rule_has_a_witness(self, reference):
        witnessed = set()
        for _, derivations in closure(reference).items():
            witnessed.update(int(d.rule) for d in derivations)
        assert witnessed >= set(range(1, 14))

    def test_extra_words_not_in_closure(self, reference):
        cl = closure(reference)
        for word in EXTRA_WORDS:
            assert word not in cl

    def test_no_derivation_chains(self, reference):
        # rules apply to list entries only: a derived form never feeds
        # another rule unless the table spells the result out directly
        cl = closure(reference)
        assert "talkers" not in cl       # plural of an agent noun
        assert "talkered" not in cl
        assert "thoughts" in cl          # deduced, present as a table entry
        assert "lowering" in cl
        for surface, derivations in cl.items():
            for d in derivations:
                assert d.root_surface in reference

    def test_closure_deterministic(self, reference):
        first = {s: ds for s, ds in closure(reference).items()}
        closure.cache_clear()
        second = {s: ds for s, ds in closure(reference).items()}
        assert first == second
