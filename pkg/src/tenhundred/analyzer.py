"""Corpus statistics: rule-attribution histograms, coverage, rank-frequency.

Every distinct surface is assigned to exactly one disjoint bin.  Listed
forms win outright; the two systematic ambiguities get their own bins
(noun-or-verb -s forms, verb-or-adjective -er forms); any other multi-rule
surface falls to the lowest applicable rule.  Two aggregate bins (`*+s`,
`*+er`) are sums of disjoint bins, never counted independently.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .lexicon import WordList
from .morphology import CheckResult, Derivation, Rule, check_token
from .textpipe import Token

__all__ = [
    "Bin",
    "DISJOINT_BINS",
    "AGGREGATE_BINS",
    "RuleHistogram",
    "RankFrequency",
    "EmptyCorpusError",
    "classify_surface",
    "classify_stream",
    "coverage",
    "rank_frequency",
    "analysis_report",
]


class Bin(str, enum.Enum):
    LISTED = "listed form"
    STAR_S = "*+s"
    NOUN_VERB_S = "noun-verb+s"
    STAR_ER = "*+er"
    VERB_ING = "verb+ing"
    VERB_ER = "verb+er"
    VERB_ED = "verb+ed"
    IRR_VERB = "irregular verb form"
    NOUN_S = "noun+s"
    VERB_S = "verb+s"
    ADJ_ER = "adj+er"
    ADJ_EST = "adj+est"
    VERB_ADJ_ER = "verb-adj+er"
    NOUN_Y = "noun+y"
    EXTRA_WORD = "extra word"
    BASIC_FORM = "basic form"
    PRONOUN_FORM = "pronoun form"
    ADJ_LY = "adj+ly"
    NOUN_TO_VERB = "noun-to-verb"
    ADJ_NESS = "adj+ness"
    IRR_NOUN = "irregular noun form"
    ADJ_TO_VERB = "adj-to-verb"
    VERB_TO_NOUN = "verb-to-noun"
    OTHER_S = "other+s"
    FUL_FORM = "-ful form"
    ACRONYM = "acronym"


DISJOINT_BINS: tuple[Bin, ...] = tuple(
    b for b in Bin if b not in (Bin.STAR_S, Bin.STAR_ER)
)

AGGREGATE_BINS: dict[Bin, tuple[Bin, ...]] = {
    Bin.STAR_S: (Bin.NOUN_VERB_S, Bin.NOUN_S, Bin.VERB_S, Bin.OTHER_S),
    Bin.STAR_ER: (Bin.VERB_ER, Bin.ADJ_ER, Bin.VERB_ADJ_ER),
}


class EmptyCorpusError(ValueError):
    """Coverage is undefined for an empty corpus."""


def _bin_of_derivation(d: Derivation) -> Bin:
    if d.rule == Rule.LISTED:
        return Bin.LISTED
    if d.rule == Rule.VERB_FORM:
        if d.irregular:
            return Bin.IRR_VERB
        return {"s": Bin.VERB_S, "ed": Bin.VERB_ED, "ing": Bin.VERB_ING}[d.suffix]
    if d.rule == Rule.AGENT_NOUN:
        return Bin.VERB_ER
    if d.rule == Rule.PLURAL:
        if d.root_surface == "other":
            return Bin.OTHER_S
        return Bin.IRR_NOUN if d.irregular else Bin.NOUN_S
    if d.rule == Rule.COMPARISON:
        return Bin.ADJ_ER if d.suffix == "er" else Bin.ADJ_EST
    if d.rule == Rule.ADJ_FROM_NOUN:
        return Bin.FUL_FORM if d.suffix == "ful" else Bin.NOUN_Y
    if d.rule == Rule.ADVERB:
        return Bin.ADJ_LY
    if d.rule == Rule.NOUN_FROM_ADJ:
        return Bin.ADJ_NESS
    if d.rule == Rule.PRONOUN_FORM:
        return Bin.PRONOUN_FORM
    if d.rule == Rule.NOUN_VERB_PAIR:
        # direction comes from the root's category: a noun root licenses a
        # verb form (life->live) and vice versa (think->thought)
        return Bin.NOUN_TO_VERB if "noun" in d.root.pos else Bin.VERB_TO_NOUN
    if d.rule == Rule.BASE_FORM:
        return Bin.BASIC_FORM
    if d.rule == Rule.VERB_FROM_ADJ:
        return Bin.ADJ_TO_VERB
    if d.rule == Rule.ACRONYM:
        return Bin.ACRONYM
    return Bin.EXTRA_WORD


def classify_surface(result: CheckResult) -> Bin | None:
    """Disjoint bin for a checked surface; None when underivable."""
    if result.verdict == "extra":
        return Bin.EXTRA_WORD
    if result.verdict == "rejected":
        return None
    rules = {d.rule for d in result.derivations}
    if Rule.LISTED in rules:
        return Bin.LISTED
    bins = {_bin_of_derivation(d) for d in result.derivations}
    third_singular = any(
        d.rule == Rule.VERB_FORM and d.suffix == "s" for d in result.derivations
    )
    plural = any(d.rule == Rule.PLURAL for d in result.derivations)
    if third_singular and plural:
        return Bin.NOUN_VERB_S
    if Bin.VERB_ER in bins and Bin.ADJ_ER in bins:
        return Bin.VERB_ADJ_ER
    # residual multi-rule surfaces fall to the lowest rule id
    best = min(result.derivations, key=lambda d: (int(d.rule), d.suffix or ""))
    return _bin_of_derivation(best)


@dataclass
class RuleHistogram:
    """Counts per disjoint bin; aggregates are derived, not stored."""

    bins: dict[Bin, int]
    total: int
    mode: str  # word-forms | word-occurrences

    @classmethod
    def from_counts(cls, counts: Counter, mode: str) -> "RuleHistogram":
        bins = {b: counts.get(b, 0) for b in DISJOINT_BINS}
        return cls(bins=bins, total=sum(bins.values()), mode=mode)

    def aggregate(self, b: Bin) -> int:
        return sum(self.bins[part] for part in AGGREGATE_BINS[b])

    def as_dict(self) -> dict[str, int]:
        out = {b.value: self.bins[b] for b in DISJOINT_BINS}
        for agg in AGGREGATE_BINS:
            out[agg.value] = self.aggregate(agg)
        return out


def classify_stream(
    tokens: Sequence[Token | str], word_list: WordList
) -> tuple[RuleHistogram, RuleHistogram, list[CheckResult]]:
    """Histogram a normalized token stream over forms and occurrences.

    Underivable surfaces are excluded from both histograms and reported via
    their CheckResult (verdict `rejected`) in the returned list, which holds
    one entry per distinct surface in first-seen order.
    """
    occurrences = Counter(_surface(t) for t in tokens)
    results: list[CheckResult] = []
    seen: dict[str, Bin | None] = {}
    for token in tokens:
        surface = _surface(token)
        if surface in seen:
            continue
        result = check_token(surface, word_list)
        seen[surface] = classify_surface(result)
        results.append(result)

    form_counts: Counter = Counter()
    occ_counts: Counter = Counter()
    for surface, b in seen.items():
        if b is None:
            continue
        form_counts[b] += 1
        occ_counts[b] += occurrences[surface]
    return (
        RuleHistogram.from_counts(form_counts, "word-forms"),
        RuleHistogram.from_counts(occ_counts, "word-occurrences"),
        results,
    )


def coverage(
    forms: RuleHistogram, occurrences: RuleHistogram
) -> tuple[float, float]:
    """(token coverage, form coverage): the listed-form share of each total."""
    if occurrences.total == 0 or forms.total == 0:
        raise EmptyCorpusError("coverage is undefined on an empty corpus")
    return (
        occurrences.bins[Bin.LISTED] / occurrences.total,
        forms.bins[Bin.LISTED] / forms.total,
    )


@dataclass
class RankFrequency:
    mode: str  # surface | lemmatized
    items: list[tuple[int, str, int]] = field(default_factory=list)

    def counts(self) -> list[int]:
        return [count for _, _, count in self.items]

    def to_tsv(self) -> str:
        return "".join(f"{r}\t{t}\t{c}\n" for r, t, c in self.items)


def _surface(token: Token | str) -> str:
    return token.surface if isinstance(token, Token) else token


def _lemma(surface: str, word_list: WordList) -> str | None:
    """Map a surface to its list-entry root; None if it has no derivation.

    Ambiguous derivation sets resolve to the shared root when unique,
    otherwise to the alphabetically first root.
    """
    result = check_token(surface, word_list)
    roots = sorted({d.root_surface for d in result.derivations if d.root is not None})
    if not roots:
        return None
    return roots[0]


def rank_frequency(
    tokens: Sequence[Token | str], mode: str, word_list: WordList
) -> RankFrequency:
    """Descending count table of surfaces or lemmatized list entries."""
    if mode not in ("surface", "lemmatized"):
        raise ValueError(f"unknown mode {mode!r}")
    counts: Counter = Counter()
    if mode == "surface":
        counts.update(_surface(t) for t in tokens)
    else:
        lemma_cache: dict[str, str | None] = {}
        for token in tokens:
            surface = _surface(token)
            if surface not in lemma_cache:
                lemma_cache[surface] = _lemma(surface, word_list)
            lemma = lemma_cache[surface]
            if lemma is not None:
                counts[lemma] += 1
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    rf = RankFrequency(mode=mode)
    rf.items = [(rank, term, count) for rank, (term, count) in enumerate(ordered, 1)]
    return rf


def analysis_report(
    tokens: Sequence[Token | str], word_list: WordList
) -> dict:
    """JSON-ready analysis: histograms, coverage, and diagnostics."""
    forms, occurrences, results = classify_stream(tokens, word_list)
    token_cov, form_cov = coverage(forms, occurrences)
    return {
        "totals": {"forms": forms.total, "occurrences": occurrences.total},
        "histograms": {
            "forms": forms.as_dict(),
            "occurrences": occurrences.as_dict(),
        },
        "coverage": {"tokens": token_cov, "forms": form_cov},
        "diagnostics": {
            "underivable": sorted(
                r.surface for r in results if r.verdict == "rejected"
            ),
            "extra": sorted(r.surface for r in results if r.verdict == "extra"),
        },
    }
