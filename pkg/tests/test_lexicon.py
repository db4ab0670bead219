import io

import pytest

from tenhundred.lexicon import (
    LexiconError,
    is_listed,
    load_irregular_forms,
    load_word_list,
    lookup,
    reference_data_path,
    serialize_word_list,
)


class TestLoad:
    def test_reference_list_has_998_entries(self, reference):
        assert reference.size == 998

    def test_empty_file_is_valid_but_empty(self):
        wl = load_word_list(io.StringIO(""))
        assert wl.size == 0

    def test_duplicate_surface_rejected(self):
        with pytest.raises(LexiconError, match="duplicate surface 'thing'"):
            load_word_list(io.StringIO("thing\tnoun\nthing\tnoun\n"))

    def test_malformed_line_reports_line_number(self):
        with pytest.raises(LexiconError, match="line 2"):
            load_word_list(io.StringIO("thing\tnoun\nbroken-line\n"))

    def test_bad_pos_rejected(self):
        with pytest.raises(LexiconError, match="unknown pos"):
            load_word_list(io.StringIO("thing\tnoun,gerund\n"))

    def test_comments_and_blank_lines_skipped(self):
        wl = load_word_list(io.StringIO("# header\n\nthing\tnoun\n"))
        assert wl.size == 1

    def test_unresolvable_irregular_reference_rejected(self):
        words = io.StringIO("thing\tnoun\n")
        irregular = io.StringIO("tooth\tplural\tteeth\n")
        with pytest.raises(LexiconError, match="unlisted root 'tooth'"):
            load_word_list(words, irregular)

    def test_inline_irregular_spec(self):
        wl = load_word_list(io.StringIO("tooth\tnoun\tplural:teeth\n"))
        lex = wl.get("tooth")
        assert [(f.kind, f.form) for f in lex.irregular] == [("plural", "teeth")]

    def test_unknown_irregular_kind_rejected(self):
        with pytest.raises(LexiconError, match="unknown irregular kind"):
            load_irregular_forms(io.StringIO("tooth\tweird\tteeth\n"))


class TestLookup:
    def test_listed_word(self, reference):
        (lex,) = lookup(reference, "thing")
        assert lex.surface == "thing"
        assert lex.pos == frozenset({"noun"})

    def test_absent_word(self, reference):
        assert lookup(reference, "zzz") == frozenset()

    def test_some_is_not_listed(self, reference):
        # the list is kept strict: the corpus anomaly is not patched over
        assert lookup(reference, "some") == frozenset()

    def test_top_ten_words_listed(self, reference):
        for word in ["the", "to", "of", "a", "it", "and", "in", "that", "this", "you"]:
            assert is_listed(reference, word), word

    def test_television_listed_but_not_its_acronym(self, reference):
        assert is_listed(reference, "television")
        assert not is_listed(reference, "tv")

    def test_empty_string_not_listed(self, reference):
        assert not is_listed(reference, "")

    def test_is_listed_iff_lookup_nonempty(self, reference):
        for surface in ["the", "zzz", "some", "tv", "television", "be"]:
            assert is_listed(reference, surface) == bool(lookup(reference, surface))


class TestInvariants:
    def test_round_trip_byte_identical(self, reference):
        original = reference_data_path("words.tsv").read_text(encoding="utf-8")
        assert serialize_word_list(reference) == original

    def test_every_irregular_root_resolves(self, reference):
        for form in reference.irregular_forms:
            assert reference.get(form.root) is not None, form

    def test_entry_surfaces_are_wellformed(self, reference):
        for lex in reference:
            assert lex.surface == lex.surface.lower()
            assert lex.pos

    def test_paper_noted_omissions_absent(self, reference):
        # accidental omissions stay omitted; rules 9 and the extra-word
        # verdict account for them downstream
        for word in ["some", "they", "us", "ours", "his"]:
            assert not is_listed(reference, word), word

    def test_extra_words_not_listed(self, reference):
        for word in ["some", "mad", "hat", "apart", "rid", "worth"]:
            assert not is_listed(reference, word), word

    def test_content_hash_stable(self, reference):
        assert reference.content_hash() == reference.content_hash()
        assert len(reference.content_hash()) == 16
