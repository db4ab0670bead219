"""Command-line interface: check, analyze, fit, expand, serve.

Exit codes: 0 clean, 1 extra words found, 2 rejected words found,
3 unreadable input, 4 empty corpus, 5 degenerate fit data, 6 unlisted word,
64 bad usage.  All machine output is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .analyzer import analysis_report, rank_frequency
from .distfit import CountSample, DegenerateSampleError, fit_report
from .lexicon import WordList, load_reference_word_list, load_word_list
from .morphology import analyze, check_token, derive_forms, export_closure_tsv
from .textpipe import load_contractions, normalize_and_tokenize

EXIT_OK = 0
EXIT_EXTRA = 1
EXIT_REJECTED = 2
EXIT_UNREADABLE = 3
EXIT_EMPTY_CORPUS = 4
EXIT_DEGENERATE = 5
EXIT_UNLISTED = 6
EXIT_USAGE = 64

DATA_DIR_ENV = "TENHUNDRED_DATA_DIR"


@dataclass
class RunConfig:
    word_list: Path | None = None
    irregular_forms: Path | None = None
    contractions: Path | None = None
    output_format: str = "plain"
    threshold: float = 0.05
    serve_addr: str = "127.0.0.1:8100"


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    data_dir = os.environ.get(DATA_DIR_ENV)
    if data_dir:
        base = Path(data_dir)
        config.word_list = base / "words.tsv"
        config.irregular_forms = base / "irregular_forms.tsv"
        contractions = base / "contractions.tsv"
        if contractions.exists():
            config.contractions = contractions
    if getattr(args, "word_list", None):
        config.word_list = Path(args.word_list)
    if getattr(args, "irregular_forms", None):
        config.irregular_forms = Path(args.irregular_forms)
    if getattr(args, "contractions", None):
        config.contractions = Path(args.contractions)
    if getattr(args, "format", None):
        config.output_format = args.format
    if getattr(args, "threshold", None) is not None:
        if not 0.0 < args.threshold < 1.0:
            raise SystemExit(EXIT_USAGE)
        config.threshold = args.threshold
    if getattr(args, "serve_addr", None):
        config.serve_addr = args.serve_addr
    return config


def _load_lexicon(config: RunConfig) -> WordList:
    if config.word_list is None:
        return load_reference_word_list()
    return load_word_list(config.word_list, config.irregular_forms)


def _load_contractions(config: RunConfig):
    return load_contractions(config.contractions) if config.contractions else None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _line_column(text: str, byte_offset: int) -> tuple[int, int]:
    prefix = text.encode("utf-8")[:byte_offset].decode("utf-8", errors="replace")
    line = prefix.count("\n") + 1
    column = len(prefix) - (prefix.rfind("\n") + 1) + 1
    return line, column


def cmd_check(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    word_list = _load_lexicon(config)
    try:
        text = _read_input(args.input)
    except OSError as err:
        print(f"error: cannot read {args.input}: {err}", file=sys.stderr)
        return EXIT_UNREADABLE
    tokens = normalize_and_tokenize(text, word_list, _load_contractions(config))
    flagged = []
    cache: dict[str, object] = {}
    counts = {"allowed": 0, "extra": 0, "rejected": 0}
    for token in tokens:
        result = cache.get(token.surface)
        if result is None:
            result = check_token(token.surface, word_list)
            cache[token.surface] = result
        counts[result.verdict] += 1
        if result.verdict != "allowed":
            line, column = _line_column(text, token.span[0])
            flagged.append(
                {
                    "line": line,
                    "column": column,
                    "start": token.span[0],
                    "end": token.span[1],
                    "surface": token.surface,
                    "verdict": result.verdict,
                    "suggestions": list(result.suggestions),
                }
            )
    if config.output_format == "json":
        report = {"tokens": len(tokens), "counts": counts, "flagged": flagged}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for item in flagged:
            suggestions = ", ".join(item["suggestions"])
            print(
                f"{item['line']}:{item['column']}\t{item['surface']}"
                f"\t{item['verdict']}\t{suggestions}"
            )
    if counts["rejected"]:
        return EXIT_REJECTED
    if counts["extra"]:
        return EXIT_EXTRA
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    word_list = _load_lexicon(config)
    try:
        text = _read_input(args.input)
    except OSError as err:
        print(f"error: cannot read {args.input}: {err}", file=sys.stderr)
        return EXIT_UNREADABLE
    tokens = normalize_and_tokenize(text, word_list, _load_contractions(config))
    if not tokens:
        print("error: empty corpus", file=sys.stderr)
        return EXIT_EMPTY_CORPUS
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = analysis_report(tokens, word_list)
    (out_dir / "report.json").write_text(
        json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    for mode, name in (("surface", "rank_surface.tsv"), ("lemmatized", "rank_lemmatized.tsv")):
        rf = rank_frequency(tokens, mode, word_list)
        (out_dir / name).write_text(rf.to_tsv(), encoding="utf-8")
    print(f"wrote report.json, rank_surface.tsv, rank_lemmatized.tsv to {out_dir}")
    return EXIT_OK


def cmd_fit(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    try:
        text = _read_input(args.input)
    except OSError as err:
        print(f"error: cannot read {args.input}: {err}", file=sys.stderr)
        return EXIT_UNREADABLE
    counts = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        columns = line.split("\t")
        counts.append(int(columns[-1]))
    try:
        sample = CountSample.from_iterable(counts)
        report = fit_report(sample, threshold=config.threshold)
    except DegenerateSampleError as err:
        print(f"error: degenerate sample: {err}", file=sys.stderr)
        return EXIT_DEGENERATE
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    word_list = _load_lexicon(config)
    if args.closure:
        export_closure_tsv(word_list, sys.stdout)
        return EXIT_OK
    if not args.word:
        print("error: a word is required", file=sys.stderr)
        return EXIT_USAGE
    word = args.word.lower()
    if args.reverse:
        derivations = analyze(word, word_list)
    else:
        lexeme = word_list.get(word)
        if lexeme is None:
            print(f"error: {word!r} is not on the list", file=sys.stderr)
            return EXIT_UNLISTED
        derivations = derive_forms(lexeme, word_list)
    rows = sorted(derivations, key=lambda d: (int(d.rule), d.surface))
    if config.output_format == "json":
        payload = [
            {
                "surface": d.surface,
                "root": d.root_surface,
                "rule": int(d.rule),
                "suffix": d.suffix,
                "irregular": d.irregular,
            }
            for d in rows
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for d in rows:
            print(f"{d.surface}\t{d.root_surface}\trule {int(d.rule)}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    config = _resolve_config(args)
    word_list = _load_lexicon(config)
    host, _, port = config.serve_addr.rpartition(":")
    app = create_app(word_list, cors_origins=tuple(args.cors_origin))
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tenhundred",
        description="Check, analyze, and model text against the ten-hundred word list.",
    )
    parser.add_argument("--version", action="version", version=__version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--word-list", help="path to a word-list TSV")
    common.add_argument("--irregular-forms", help="path to an irregular-forms TSV")
    common.add_argument("--contractions", help="path to a contraction-table TSV")
    common.add_argument("--format", choices=["plain", "json", "tsv"], default=None)
    common.add_argument("--threshold", type=float, default=None,
                        help="significance threshold in (0,1)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="flag non-allowed words")
    p.add_argument("input", help="input file, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", parents=[common], help="corpus statistics")
    p.add_argument("input", help="input file, or - for stdin")
    p.add_argument("--output-dir", default=".", help="where to write reports")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fit", parents=[common],
                       help="fit a rank-frequency TSV (last column = counts)")
    p.add_argument("input", help="rank-frequency TSV, or - for stdin")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("expand", parents=[common], help="list licensed forms")
    p.add_argument("word", nargs="?", help="a list entry (or any form with --reverse)")
    p.add_argument("--reverse", action="store_true",
                   help="explain a surface form instead of expanding an entry")
    p.add_argument("--closure", action="store_true",
                   help="dump the whole closure as TSV")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--serve-addr", default="127.0.0.1:8100")
    p.add_argument("--cors-origin", action="append", default=["*"])
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
