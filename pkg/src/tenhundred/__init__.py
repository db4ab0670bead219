"""Toolkit for the ten-hundred-word controlled English.

A rule-based morphology engine over a 998-entry word list, a text
normalization pipeline, corpus statistics (rule-attribution histograms,
coverage, rank-frequency tables), a discrete power-law / exponential model
comparison, and a checking service for live writing assistance.
"""

from .lexicon import (
    IrregularForm,
    Lexeme,
    LexiconError,
    WordList,
    is_listed,
    load_reference_word_list,
    load_word_list,
    lookup,
    serialize_word_list,
)
from .morphology import (
    EXTRA_WORDS,
    CheckResult,
    Derivation,
    Rule,
    analyze,
    apply_suffix,
    check_token,
    closure,
    derive_forms,
    suggest,
)
from .textpipe import Token, expand_contraction, normalize_and_tokenize, split_compound
from .analyzer import (
    Bin,
    RankFrequency,
    RuleHistogram,
    classify_stream,
    coverage,
    rank_frequency,
)
from .distfit import (
    CountSample,
    ExponentialFit,
    LRTestResult,
    PowerLawFit,
    fit_exponential,
    fit_power_law,
    likelihood_ratio_test,
)

__version__ = "0.1.0"
