"""Normalization pipeline: raw UTF-8 text to the analyzer's token stream.

Steps run in a fixed order: character filtering (keep letters, hyphens,
apostrophes), lowercasing, de-hyphenation, contraction expansion, an->a
normalization, genitive stripping, whitespace tokenization, and compound
splitting.  Tokens carry byte spans into the original text so callers can
highlight the source region; tokens produced by expanding a contraction or
splitting a compound share their source span.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

from .lexicon import WordList
from .morphology import closure

__all__ = [
    "Token",
    "normalize_and_tokenize",
    "split_compound",
    "expand_contraction",
    "load_contractions",
]

# Trace step names, in pipeline order.
CHAR_FILTER = "char-filter"
LOWERCASE = "lowercase"
DEHYPHENATE = "dehyphenate"
CONTRACTION = "contraction-expand"
AN_NORMALIZE = "an-normalize"
GENITIVE = "genitive-strip"
COMPOUND = "compound-split"

# Apostrophe suffixes expanded generically when the token is not in the
# contraction table; 's is deliberately absent (table-only, else genitive).
_GENERIC_SUFFIXES = (
    ("n't", "not"),
    ("'re", "are"),
    ("'ll", "will"),
    ("'ve", "have"),
    ("'m", "am"),
    ("'d", "would"),
)

_KEEP = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ'-")


@dataclass(frozen=True)
class Token:
    """A normalized token with its byte span in the original text."""

    surface: str
    span: tuple[int, int]
    trace: tuple[str, ...] = ()


def load_contractions(source: str | Path | TextIO | None = None) -> dict[str, tuple[str, ...]]:
    """Read a `contraction<TAB>expansion-words` table (bundled by default)."""
    if source is None:
        path = resources.files("tenhundred") / "data" / "contractions.tsv"
        text = path.read_text(encoding="utf-8")
    elif isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    table: dict[str, tuple[str, ...]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        contraction, expansion = line.split("\t")
        table[contraction] = tuple(expansion.split())
    return table


@lru_cache(maxsize=1)
def _default_contractions() -> dict[str, tuple[str, ...]]:
    return load_contractions()


def expand_contraction(
    surface: str, table: dict[str, tuple[str, ...]] | None = None
) -> list[str]:
    """Expand one lowercased token; unknown apostrophe forms pass through."""
    if "'" not in surface:
        return [surface]
    if table is None:
        table = _default_contractions()
    if surface in table:
        return list(table[surface])
    for suffix, word in _GENERIC_SUFFIXES:
        stem = surface[: -len(suffix)]
        if surface.endswith(suffix) and stem and "'" not in stem:
            return [stem, word]
    return [surface]


def split_compound(surface: str, word_list: WordList) -> list[str]:
    """Split a+b when both halves are recognized words of length >= 3.

    Among several split points the longest first part wins.  Unsplittable
    surfaces come back unchanged.
    """
    cl = closure(word_list)
    for cut in range(len(surface) - 3, 2, -1):
        left, right = surface[:cut], surface[cut:]
        if left in cl and right in cl:
            return [left, right]
    return [surface]


def _filtered_lower(text: str) -> str:
    """Length-preserving copy: kept characters lowercased, the rest spaces."""
    out = []
    for ch in text:
        if ch in _KEEP:
            out.append(ch.lower())
        elif ch == "’" or ch == "‘":  # curly apostrophes
            out.append("'")
        else:
            out.append(" ")
    return "".join(out)


def _byte_offsets(text: str) -> list[int]:
    offsets = [0]
    total = 0
    for ch in text:
        total += len(ch.encode("utf-8"))
        offsets.append(total)
    return offsets


def normalize_and_tokenize(
    text: str,
    word_list: WordList,
    contractions: dict[str, tuple[str, ...]] | None = None,
) -> list[Token]:
    """Run the full pipeline over a document."""
    if contractions is None:
        contractions = _default_contractions()
    filtered = _filtered_lower(text)
    offsets = _byte_offsets(text)
    cl = closure(word_list)

    tokens: list[Token] = []
    i, n = 0, len(filtered)
    while i < n:
        if filtered[i] == " ":
            i += 1
            continue
        j = i
        while j < n and filtered[j] != " ":
            j += 1
        chunk = filtered[i:j]
        span = (offsets[i], offsets[j])
        trace: list[str] = []
        if chunk != text[i:j]:
            if chunk != text[i:j].lower():
                trace.append(CHAR_FILTER)
            if any(c.isupper() for c in text[i:j]):
                trace.append(LOWERCASE)

        if "-" in chunk:
            chunk = chunk.replace("-", "")
            trace.append(DEHYPHENATE)
        if not chunk:
            i = j
            continue

        expanded = expand_contraction(chunk, contractions)
        if expanded != [chunk]:
            trace.append(CONTRACTION)

        for word in expanded:
            word_trace = list(trace)
            if word == "an":
                word = "a"
                word_trace.append(AN_NORMALIZE)
            if word.endswith("'s"):
                word = word[:-2]
                word_trace.append(GENITIVE)
            elif word.endswith("s'"):
                word = word[:-1]
                word_trace.append(GENITIVE)
            if "'" in word:
                # leftover apostrophes carry no structure; drop them
                word = word.replace("'", "")
                if CHAR_FILTER not in word_trace:
                    word_trace.append(CHAR_FILTER)
            if not word:
                continue
            if word not in cl:
                parts = split_compound(word, word_list)
            else:
                parts = [word]
            if len(parts) > 1:
                word_trace.append(COMPOUND)
            for part in parts:
                tokens.append(Token(part, span, tuple(word_trace)))
        i = j
    return tokens


def join_tokens(tokens: Iterable[Token]) -> str:
    """Plain-text rendering of a token stream (pipeline fixed point)."""
    return " ".join(t.surface for t in tokens)
