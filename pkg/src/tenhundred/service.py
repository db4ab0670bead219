"""HTTP checking service for the editor UI and other clients.

Three endpoints: POST /v1/check annotates a document, GET /v1/wordlist
serves the list with a content hash for conditional caching, and GET
/v1/expand lists the forms one entry licenses.  All state (the lexicon and
its closure) is immutable after startup, so responses are pure functions of
the request and concurrent requests never interfere.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .lexicon import WordList, load_reference_word_list
from .morphology import check_token, closure, derive_forms
from .textpipe import normalize_and_tokenize

__all__ = ["create_app"]

DEFAULT_MAX_TEXT_BYTES = 1_000_000


class CheckRequest(BaseModel):
    text: str


def _derivation_payload(derivation) -> dict:
    return {
        "root": derivation.root_surface,
        "rule": int(derivation.rule),
        "surface": derivation.surface,
        "suffix": derivation.suffix,
        "irregular": derivation.irregular,
    }


def create_app(
    word_list: WordList | None = None,
    max_text_bytes: int = DEFAULT_MAX_TEXT_BYTES,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    wl = word_list if word_list is not None else load_reference_word_list()
    closure(wl)  # build the index once, before serving
    version = wl.content_hash()

    wordlist_payload = {
        "version": version,
        "size": wl.size,
        "entries": [
            {"surface": lex.surface, "pos": sorted(lex.pos)} for lex in wl
        ],
    }
    wordlist_body = json.dumps(wordlist_payload, separators=(",", ":")).encode()

    app = FastAPI(title="tenhundred checker", version="1.0")
    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        # the API contract promises 400 for malformed bodies or parameters
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.post("/v1/check")
    async def check(request: CheckRequest) -> dict:
        body = request.text
        if len(body.encode("utf-8")) > max_text_bytes:
            raise HTTPException(status_code=413, detail="text too large")
        tokens = normalize_and_tokenize(body, wl)
        annotations = []
        counts = {"allowed": 0, "extra": 0, "rejected": 0}
        verdict_cache: dict[str, object] = {}
        for token in tokens:
            result = verdict_cache.get(token.surface)
            if result is None:
                result = check_token(token.surface, wl)
                verdict_cache[token.surface] = result
            counts[result.verdict] += 1
            if result.verdict == "allowed":
                continue
            annotations.append(
                {
                    "start": token.span[0],
                    "end": token.span[1],
                    "surface": token.surface,
                    "verdict": result.verdict,
                    "rules": sorted(int(d.rule) for d in result.derivations),
                    "suggestions": list(result.suggestions),
                }
            )
        total = len(tokens)
        return {
            "annotations": annotations,
            "stats": {
                "tokens": total,
                "allowed": counts["allowed"],
                "extra": counts["extra"],
                "rejected": counts["rejected"],
                "coverage": counts["allowed"] / total if total else None,
            },
        }

    @app.get("/v1/wordlist")
    async def wordlist(request: Request) -> Response:
        etag = f'"{version}"'
        if request.headers.get("if-none-match") == etag:
            return Response(status_code=304)
        return Response(
            content=wordlist_body,
            media_type="application/json",
            headers={"ETag": etag, "Cache-Control": "public, max-age=3600"},
        )

    @app.get("/v1/expand")
    async def expand(word: str = "") -> dict:
        if not word:
            raise HTTPException(status_code=400, detail="missing word parameter")
        lexeme = wl.get(word)
        if lexeme is None:
            raise HTTPException(status_code=404, detail=f"{word!r} is not listed")
        derivations = sorted(
            derive_forms(lexeme, wl), key=lambda d: (int(d.rule), d.surface)
        )
        return {
            "word": word,
            "derivations": [_derivation_payload(d) for d in derivations],
        }

    return app
