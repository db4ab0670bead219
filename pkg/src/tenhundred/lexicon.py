"""Word-list loading, validation, and lookup.

The lexicon is a flat list of root words, each tagged with one or more
part-of-speech categories, plus a side table of irregular forms (went,
teeth, worse, ...) that the production rules consult.  Both live in plain
TSV files so they can be inspected and extended without touching code.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, TextIO

__all__ = [
    "POS_TAGS",
    "IRREGULAR_KINDS",
    "Lexeme",
    "IrregularForm",
    "WordList",
    "LexiconError",
    "load_word_list",
    "load_reference_word_list",
    "serialize_word_list",
]

# Canonical part-of-speech inventory; file order below is the serialization order.
POS_TAGS = (
    "noun",
    "verb",
    "adjective",
    "adverb",
    "pronoun",
    "determiner",
    "preposition",
    "conjunction",
    "interjection",
    "number",
)

# Kinds of irregular-form table rows.  The inflectional kinds (past,
# third-singular, plural, ...) override the regular orthographic form of the
# same slot; the pair kinds (pronoun-variant, noun-verb-pair, base-form-pair,
# adj-verb-pair, acronym) introduce whole related words, including their
# deduced inflections, as direct entries.  `present` covers suppletive
# present-tense forms (am/are) and `ful-form` whitelists -ful derivations.
IRREGULAR_KINDS = (
    "past",
    "past-participle",
    "present-participle",
    "present",
    "third-singular",
    "plural",
    "comparative",
    "superlative",
    "pronoun-variant",
    "noun-verb-pair",
    "base-form-pair",
    "adj-verb-pair",
    "acronym",
    "ful-form",
)

_SURFACE_RE = re.compile(r"^[a-z][a-z'-]*$")


class LexiconError(ValueError):
    """Raised for malformed or inconsistent word-list data."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class IrregularForm:
    root: str
    kind: str
    form: str


@dataclass(frozen=True)
class Lexeme:
    """One word-list entry: a lowercase surface plus its category set."""

    surface: str
    pos: frozenset[str]
    irregular: tuple[IrregularForm, ...] = ()

    def __post_init__(self):
        if not _SURFACE_RE.match(self.surface):
            raise LexiconError(f"bad surface {self.surface!r}")
        if not self.pos:
            raise LexiconError(f"{self.surface!r} has no part of speech")
        bad = set(self.pos) - set(POS_TAGS)
        if bad:
            raise LexiconError(f"{self.surface!r} has unknown pos {sorted(bad)}")


class WordList:
    """Immutable, indexed word list.  Safe to share across threads."""

    def __init__(self, entries: Iterable[Lexeme]):
        self.entries: tuple[Lexeme, ...] = tuple(entries)
        self._index: dict[str, Lexeme] = {}
        self._order: dict[str, int] = {}
        for i, lex in enumerate(self.entries):
            if lex.surface in self._index:
                raise LexiconError(f"duplicate surface {lex.surface!r}")
            self._index[lex.surface] = lex
            self._order[lex.surface] = i
        self.irregular_forms: tuple[IrregularForm, ...] = tuple(
            form for lex in self.entries for form in lex.irregular
        )

    @property
    def size(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Lexeme]:
        return iter(self.entries)

    def __contains__(self, surface: str) -> bool:
        return surface in self._index

    def get(self, surface: str) -> Lexeme | None:
        return self._index.get(surface)

    def list_index(self, surface: str) -> int:
        """Position of an entry in file order (used for suggestion ties)."""
        return self._order[surface]

    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(serialize_word_list(self).encode("utf-8"))
        return h.hexdigest()[:16]


def lookup(word_list: WordList, surface: str) -> frozenset[Lexeme]:
    """Exact-match lookup of a case-folded surface; no morphology."""
    lex = word_list.get(surface)
    return frozenset((lex,)) if lex is not None else frozenset()


def is_listed(word_list: WordList, surface: str) -> bool:
    return surface in word_list


def _parse_irregular_spec(root: str, spec: str, line: int) -> list[IrregularForm]:
    forms = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            kind, form = part.split(":", 1)
        except ValueError:
            raise LexiconError(f"bad irregular spec {part!r}", line) from None
        forms.append(IrregularForm(root, kind.strip(), form.strip()))
    return forms


def _iter_data_lines(fp: TextIO) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(fp, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line.split("\t")


def load_irregular_forms(source: str | Path | TextIO) -> list[IrregularForm]:
    """Read a `root<TAB>kind<TAB>form` table."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fp:
            return load_irregular_forms(fp)
    forms = []
    for lineno, cols in _iter_data_lines(source):
        if len(cols) != 3:
            raise LexiconError(f"expected 3 tab-separated columns, got {len(cols)}", lineno)
        root, kind, form = (c.strip() for c in cols)
        if kind not in IRREGULAR_KINDS:
            raise LexiconError(f"unknown irregular kind {kind!r}", lineno)
        if not _SURFACE_RE.match(form):
            raise LexiconError(f"bad irregular form {form!r}", lineno)
        forms.append(IrregularForm(root, kind, form))
    return forms


def load_word_list(
    source: str | Path | TextIO,
    irregular_source: str | Path | TextIO | None = None,
) -> WordList:
    """Load and validate a word-list file.

    Each line is `surface<TAB>pos1,pos2[<TAB>irregular-spec]`; `#` starts a
    comment.  Irregular forms may come inline (`kind:form;kind:form`) or from
    a separate `root<TAB>kind<TAB>form` table.  Every irregular root must
    resolve to a listed entry.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fp:
            return load_word_list(fp, irregular_source)

    rows: list[tuple[int, str, frozenset[str]]] = []
    inline_irregulars: list[IrregularForm] = []
    for lineno, cols in _iter_data_lines(source):
        if len(cols) not in (2, 3):
            raise LexiconError(f"expected 2 or 3 tab-separated columns, got {len(cols)}", lineno)
        surface = cols[0].strip()
        if not _SURFACE_RE.match(surface):
            raise LexiconError(f"bad surface {surface!r}", lineno)
        pos = frozenset(p.strip() for p in cols[1].split(",") if p.strip())
        if not pos:
            raise LexiconError(f"{surface!r} has no part of speech", lineno)
        bad = pos - set(POS_TAGS)
        if bad:
            raise LexiconError(f"{surface!r} has unknown pos {sorted(bad)}", lineno)
        if len(cols) == 3 and cols[2].strip():
            inline_irregulars.extend(_parse_irregular_spec(surface, cols[2], lineno))
        rows.append((lineno, surface, pos))

    seen: dict[str, int] = {}
    for lineno, surface, _ in rows:
        if surface in seen:
            raise LexiconError(f"duplicate surface {surface!r} (first at line {seen[surface]})", lineno)
        seen[surface] = lineno

    irregulars: list[IrregularForm] = list(inline_irregulars)
    if irregular_source is not None:
        irregulars.extend(load_irregular_forms(irregular_source))

    by_root: dict[str, list[IrregularForm]] = {}
    for form in irregulars:
        if form.root not in seen:
            raise LexiconError(
                f"irregular form {form.form!r} references unlisted root {form.root!r}"
            )
        by_root.setdefault(form.root, []).append(form)

    entries = [
        Lexeme(surface, pos, tuple(by_root.get(surface, ())))
        for _, surface, pos in rows
    ]
    return WordList(entries)


def serialize_word_list(word_list: WordList) -> str:
    """Canonical text form of a word list; inverse of `load_word_list`."""
    lines = []
    for lex in word_list:
        pos = ",".join(tag for tag in POS_TAGS if tag in lex.pos)
        lines.append(f"{lex.surface}\t{pos}")
    return "\n".join(lines) + "\n"


def _data_path(name: str) -> Path:
    return Path(str(resources.files("tenhundred") / "data" / name))


def reference_data_path(name: str) -> Path:
    """Path of a bundled data file (word list, irregular table, ...)."""
    return _data_path(name)


def load_reference_word_list() -> WordList:
    """The bundled 998-entry list with its irregular-form table."""
    return load_word_list(_data_path("words.tsv"), _data_path("irregular_forms.tsv"))
