"""Production rules over the word list: generator, recognizer, and checker.

Thirteen rules license surface forms from list entries.  The engine runs in
both directions: `derive_forms` expands one entry into everything it
licenses, `analyze` explains a surface as a set of derivations, and
`check_token` turns that into an allowed / extra / rejected verdict with
ranked replacement suggestions.  Rules never chain: they apply to list
entries only, except for the deduced inflections of the pair rules (10-12),
which ship as direct table entries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, TextIO

import numpy as np

from .lexicon import Lexeme, WordList

__all__ = [
    "Rule",
    "Derivation",
    "CheckResult",
    "EXTRA_WORDS",
    "SUFFIXES",
    "apply_suffix",
    "derive_forms",
    "analyze",
    "check_token",
    "closure",
    "Closure",
    "suggest",
    "edit_distance",
    "export_closure_tsv",
]


class Rule(enum.IntEnum):
    """Production-rule identifiers; EXTRA marks the six tolerated anomalies."""

    EXTRA = 0
    LISTED = 1            # word forms on the list
    VERB_FORM = 2         # conjugations of listed verbs, incl. irregulars
    AGENT_NOUN = 3        # -er nouns from listed verbs
    PLURAL = 4            # -s plurals of listed nouns, incl. irregulars
    COMPARISON = 5        # -er/-est from listed adjectives, incl. irregulars
    ADJ_FROM_NOUN = 6     # -y / whitelisted -ful from listed nouns
    ADVERB = 7            # -ly from listed adjectives
    NOUN_FROM_ADJ = 8     # -ness from listed adjectives
    PRONOUN_FORM = 9      # case/possessive pronoun variants
    NOUN_VERB_PAIR = 10   # similar-but-unequal noun<->verb pairs
    BASE_FORM = 11        # more basic forms of listed words
    VERB_FROM_ADJ = 12    # verbs from listed adjectives
    ACRONYM = 13          # acronyms for listed words


# The six words observed in the corpus that no rule licenses.
EXTRA_WORDS = frozenset({"some", "mad", "hat", "apart", "rid", "worth"})

SUFFIXES = ("s", "ed", "ing", "er", "est", "y", "ful", "ly", "ness")

_VOWELS = set("aeiou")
_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


@lru_cache(maxsize=1)
def _doubling_stems() -> frozenset[str]:
    path = resources.files("tenhundred") / "data" / "doubling.txt"
    words = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return frozenset(words)


def _ends_consonant_y(stem: str) -> bool:
    return len(stem) >= 2 and stem.endswith("y") and stem[-2] not in _VOWELS


def _doubled(stem: str) -> str:
    return stem + stem[-1] if stem in _doubling_stems() else stem


def apply_suffix(stem: str, suffix: str) -> str:
    """Attach a suffix with standard orthographic adjustments.

    Handles e-drop before vowel-initial suffixes, y->i, -es after sibilants
    and final o, ie->y before -ing, and consonant doubling for stems on the
    bundled doubling list.
    """
    if suffix not in SUFFIXES:
        raise ValueError(f"unknown suffix {suffix!r}")

    if suffix == "s":
        if stem.endswith(_SIBILANT_ENDINGS):
            return stem + "es"
        if _ends_consonant_y(stem):
            return stem[:-1] + "ies"
        if stem.endswith("o") and len(stem) >= 2 and stem[-2] not in _VOWELS:
            return stem + "es"
        return stem + "s"

    if suffix == "ed":
        if stem.endswith("e"):
            return stem + "d"
        if _ends_consonant_y(stem):
            return stem[:-1] + "ied"
        return _doubled(stem) + "ed"

    if suffix == "ing":
        if stem.endswith("ie"):
            return stem[:-2] + "ying"
        if stem.endswith(("ee", "oe", "ye")) or len(stem) <= 2:
            return stem + "ing"
        if stem.endswith("e"):
            return stem[:-1] + "ing"
        return _doubled(stem) + "ing"

    if suffix in ("er", "est"):
        if stem.endswith("e"):
            return stem + ("r" if suffix == "er" else "st")
        if _ends_consonant_y(stem):
            return stem[:-1] + "i" + suffix
        return _doubled(stem) + suffix

    if suffix == "y":
        if stem.endswith("e") and len(stem) > 2 and not stem.endswith("ee"):
            return stem[:-1] + "y"
        return _doubled(stem) + "y"

    if suffix == "ful":
        if _ends_consonant_y(stem):
            return stem[:-1] + "iful"
        return stem + "ful"

    if suffix == "ly":
        if stem.endswith("le"):
            return stem[:-1] + "y"
        if stem.endswith("ll"):
            return stem + "y"
        if _ends_consonant_y(stem):
            return stem[:-1] + "ily"
        return stem + "ly"

    # ness
    if _ends_consonant_y(stem):
        return stem[:-1] + "iness"
    return stem + "ness"


@dataclass(frozen=True)
class Derivation:
    """Why a surface form is permitted: root entry, rule, and suffix used.

    `root` is None only for the EXTRA sentinel.  `irregular` marks forms that
    came from the irregular table rather than regular orthography.
    """

    root: Lexeme | None
    rule: Rule
    surface: str
    suffix: str | None = None
    irregular: bool = False

    @property
    def root_surface(self) -> str:
        return self.root.surface if self.root is not None else ""


@dataclass(frozen=True)
class CheckResult:
    surface: str
    verdict: str  # allowed | extra | rejected
    derivations: frozenset[Derivation]
    suggestions: tuple[str, ...] = ()


class DomainError(ValueError):
    """A lexeme was used with a word list it does not belong to."""


def _irregular_by_kind(lexeme: Lexeme) -> dict[str, list[str]]:
    table: dict[str, list[str]] = {}
    for form in lexeme.irregular:
        table.setdefault(form.kind, []).append(form.form)
    return table


def derive_forms(lexeme: Lexeme, word_list: WordList) -> frozenset[Derivation]:
    """Every surface the production rules license from one list entry.

    Irregular table entries replace the regular orthographic form of the
    same slot (teeth suppresses tooths).  Derived surfaces equal to the root
    itself are dropped: rule 1 already covers them.
    """
    if word_list.get(lexeme.surface) is not lexeme:
        raise DomainError(f"{lexeme.surface!r} is not an entry of this word list")

    irr = _irregular_by_kind(lexeme)
    out: set[Derivation] = {Derivation(lexeme, Rule.LISTED, lexeme.surface)}

    def emit(rule: Rule, surface: str, suffix: str | None, irregular: bool = False):
        if surface != lexeme.surface:
            out.add(Derivation(lexeme, rule, surface, suffix, irregular))

    def slot(kind: str, regular: str | None) -> list[tuple[str, bool]]:
        """Table forms for a slot if any, else the regular form."""
        if kind in irr:
            return [(f, True) for f in irr[kind]]
        return [(regular, False)] if regular is not None else []

    if "verb" in lexeme.pos:
        # rule 2: third singular, past, past participle, -ing, plus
        # suppletive present forms; the past participle falls back to the
        # tabled past before the regular -ed form.
        regular_ed = apply_suffix(lexeme.surface, "ed")
        for form, irregular in slot("third-singular", apply_suffix(lexeme.surface, "s")):
            emit(Rule.VERB_FORM, form, None if irregular else "s", irregular)
        for form, irregular in slot("past", regular_ed):
            emit(Rule.VERB_FORM, form, None if irregular else "ed", irregular)
        # a tabled past covers the participle slot too (told/told); an extra
        # past-participle row adds distinct participles (gone, written)
        for form in irr.get("past-participle", ()):
            emit(Rule.VERB_FORM, form, None, True)
        for form, irregular in slot("present-participle", apply_suffix(lexeme.surface, "ing")):
            emit(Rule.VERB_FORM, form, None if irregular else "ing", irregular)
        for form in irr.get("present", ()):
            emit(Rule.VERB_FORM, form, None, True)
        # rule 3: agent noun
        emit(Rule.AGENT_NOUN, apply_suffix(lexeme.surface, "er"), "er")

    if "noun" in lexeme.pos or lexeme.surface == "other":
        # rule 4, extended to "other" -> "others" by the rule's own wording
        for form, irregular in slot("plural", apply_suffix(lexeme.surface, "s")):
            emit(Rule.PLURAL, form, None if irregular else "s", irregular)

    if "adjective" in lexeme.pos:
        # rule 5: comparison carries er/est even for table forms so the
        # comparative/superlative split stays visible downstream
        for form, irregular in slot("comparative", apply_suffix(lexeme.surface, "er")):
            emit(Rule.COMPARISON, form, "er", irregular)
        for form, irregular in slot("superlative", apply_suffix(lexeme.surface, "est")):
            emit(Rule.COMPARISON, form, "est", irregular)
        # rules 7, 8
        emit(Rule.ADVERB, apply_suffix(lexeme.surface, "ly"), "ly")
        emit(Rule.NOUN_FROM_ADJ, apply_suffix(lexeme.surface, "ness"), "ness")

    if "noun" in lexeme.pos:
        # rule 6: -y for every noun, -ful only where the table allows it
        emit(Rule.ADJ_FROM_NOUN, apply_suffix(lexeme.surface, "y"), "y")
        for form in irr.get("ful-form", ()):
            emit(Rule.ADJ_FROM_NOUN, form, "ful", True)

    for form in irr.get("pronoun-variant", ()):
        emit(Rule.PRONOUN_FORM, form, None, True)
    for form in irr.get("noun-verb-pair", ()):
        emit(Rule.NOUN_VERB_PAIR, form, None, True)
    for form in irr.get("base-form-pair", ()):
        emit(Rule.BASE_FORM, form, None, True)
    for form in irr.get("adj-verb-pair", ()):
        emit(Rule.VERB_FROM_ADJ, form, None, True)
    for form in irr.get("acronym", ()):
        emit(Rule.ACRONYM, form, None, True)

    return frozenset(out)


def _char_column(ch: str) -> int:
    o = ord(ch)
    if 97 <= o <= 122:
        return o - 97
    if ch in "'-":
        return 26
    return 27


class Closure:
    """The whole language: every derivable surface, indexed for lookup."""

    def __init__(self, word_list: WordList):
        self.word_list = word_list
        index: dict[str, set[Derivation]] = {}
        for lexeme in word_list:
            for derivation in sorted(
                derive_forms(lexeme, word_list), key=lambda d: (d.rule, d.surface)
            ):
                index.setdefault(derivation.surface, set()).add(derivation)
        self.index: dict[str, frozenset[Derivation]] = {
            s: frozenset(ds) for s, ds in index.items()
        }
        # smallest list position among a surface's roots; suggestion tie-break
        self._rank: dict[str, int] = {
            s: min(word_list.list_index(d.root.surface) for d in ds)
            for s, ds in self.index.items()
        }
        self.surfaces: tuple[str, ...] = tuple(
            sorted(self.index, key=lambda s: (self._rank[s], s))
        )
        # character-bag profile per surface: a cheap lower bound on edit
        # distance that lets the suggestion scan skip most true-distance work
        self._bag = np.zeros((len(self.surfaces), 28), dtype=np.int16)
        for row, s in enumerate(self.surfaces):
            for ch in s:
                self._bag[row, _char_column(ch)] += 1
        self._lengths = self._bag.sum(axis=1)
        self._ranks = np.fromiter(
            (self._rank[s] for s in self.surfaces), dtype=np.int64, count=len(self.surfaces)
        )

    def distance_lower_bounds(self, surface: str) -> np.ndarray:
        """max(length gap, unmatched characters) per closure surface."""
        query = np.zeros(28, dtype=np.int16)
        for ch in surface:
            query[_char_column(ch)] += 1
        n = len(surface)
        common = np.minimum(self._bag, query).sum(axis=1)
        return np.maximum(np.abs(self._lengths - n), np.maximum(self._lengths, n) - common)

    @property
    def suggestion_order(self) -> np.ndarray:
        return self._ranks

    def __contains__(self, surface: str) -> bool:
        return surface in self.index

    def __len__(self) -> int:
        return len(self.index)

    def derivations(self, surface: str) -> frozenset[Derivation]:
        return self.index.get(surface, frozenset())

    def rank(self, surface: str) -> int:
        return self._rank[surface]

    def items(self) -> Iterable[tuple[str, frozenset[Derivation]]]:
        return self.index.items()


@lru_cache(maxsize=8)
def closure(word_list: WordList) -> Closure:
    """Materialized union of derive_forms over all entries (cached)."""
    return Closure(word_list)


def analyze(surface: str, word_list: WordList) -> frozenset[Derivation]:
    """All derivations that would generate `surface`; empty if underivable."""
    if not surface:
        raise ValueError("surface must be non-empty")
    return closure(word_list).derivations(surface)


def edit_distance(a: str, b: str, cutoff: int | None = None) -> int:
    """Levenshtein distance; stops early past `cutoff` (returns cutoff+1)."""
    if a == b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    if cutoff is not None and len(b) - len(a) > cutoff:
        return cutoff + 1
    previous = list(range(len(a) + 1))
    for j, cb in enumerate(b, start=1):
        current = [j]
        best = j
        for i, ca in enumerate(a, start=1):
            cost = min(
                previous[i] + 1,
                current[i - 1] + 1,
                previous[i - 1] + (ca != cb),
            )
            current.append(cost)
            best = min(best, cost)
        if cutoff is not None and best > cutoff:
            return cutoff + 1
        previous = current
    return previous[-1]


def suggest(surface: str, word_list: WordList, limit: int = 5) -> tuple[str, ...]:
    """Closest allowed surfaces, ranked by edit distance then list order.

    Candidates are visited in order of a cheap lower bound on their distance
    (tie-broken by list order), so the scan stops as soon as the bound
    exceeds the worst kept distance; true distances are computed for only a
    small fraction of the closure.
    """
    cl = closure(word_list)
    if not cl.surfaces or limit < 1:
        return ()
    bounds = cl.distance_lower_bounds(surface)
    order = np.lexsort((cl.suggestion_order, bounds))
    kept: list[tuple[int, int, str]] = []
    for row in order:
        bound = int(bounds[row])
        if len(kept) == limit and bound > kept[-1][0]:
            break
        candidate = cl.surfaces[row]
        rank = int(cl.suggestion_order[row])
        if len(kept) < limit:
            kept.append((edit_distance(surface, candidate), rank, candidate))
            kept.sort()
            continue
        worst = kept[-1]
        d = edit_distance(surface, candidate, cutoff=worst[0])
        entry = (d, rank, candidate)
        if entry < worst:
            kept[-1] = entry
            kept.sort()
    return tuple(c for _, _, c in kept)


def check_token(surface: str, word_list: WordList) -> CheckResult:
    """Verdict for one case-folded token: allowed, extra, or rejected."""
    if surface in EXTRA_WORDS:
        extra = Derivation(None, Rule.EXTRA, surface)
        return CheckResult(surface, "extra", frozenset((extra,)),
                           suggest(surface, word_list))
    derivations = closure(word_list).derivations(surface) if surface else frozenset()
    if derivations:
        return CheckResult(surface, "allowed", derivations)
    return CheckResult(surface, "rejected", frozenset(), suggest(surface, word_list))


def export_closure_tsv(word_list: WordList, fp: TextIO) -> int:
    """Dump the closure as `surface<TAB>root<TAB>rule` rows; returns row count."""
    rows = 0
    for surface in sorted(closure(word_list).index):
        for d in sorted(closure(word_list).derivations(surface),
                        key=lambda d: (int(d.rule), d.root_surface)):
            fp.write(f"{surface}\t{d.root_surface}\t{int(d.rule)}\n")
            rows += 1
    return rows
