"""Pipeline configuration: a TOML file with per-language lexicon sections.

All paths are resolved relative to the config file's directory.  Example:

    languages = ["en", "es"]

    [langid]
    ngram_lengths = [1, 2, 3]
    alpha = 1.0
    model = "model.nblm"

    [langid.train]
    en = "train/en.txt"
    es = "train/es.txt"

    [provider]
    kind = "hash"        # or "cache"
    dim = 64
    seed = 0
    # path = "vectors.jsonl"   # cache file, kind = "cache" only
    # fallback = "hash"        # optional hash fallback behind the cache

    [scorer]
    aggregation = "mean"       # or "max"

    [lexicon.en]
    positive = "lexicons/en_positive.txt"
    negative = "lexicons/en_negative.txt"

    [lexicon.es]
    positive = "lexicons/es_positive.txt"
    negative = "lexicons/es_negative.txt"
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from mixlang.embeddings import CacheProvider, EmbeddingProvider, HashingProvider, load_cache
from mixlang.errors import BadConfigError
from mixlang.langid import NgramLanguageModel
from mixlang.lexicon import EmbeddedLexicon, embed_lexicon, load_lexicon
from mixlang.scorer import AGGREGATIONS


@dataclass(frozen=True)
class LexiconPaths:
    positive: Path
    negative: Path


@dataclass(frozen=True)
class PipelineConfig:
    languages: tuple[str, ...]
    n_range: tuple[int, ...]
    alpha: float
    priors: dict[str, float] | None
    model_path: Path | None
    train_paths: dict[str, Path]
    provider_kind: str  # "hash" | "cache"
    dim: int | None  # None: take the cache file's dim
    seed: int
    cache_path: Path | None
    fallback: str | None  # "hash" | None
    aggregation: str
    lexicons: dict[str, LexiconPaths] = field(default_factory=dict)


def load_config(path) -> PipelineConfig:
    """Parse and validate a pipeline config file."""
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except FileNotFoundError:
        raise BadConfigError(f"config file not found: {path}") from None
    except tomllib.TOMLDecodeError as exc:
        raise BadConfigError(f"{path}: {exc}") from exc

    base = path.parent

    def rel(p) -> Path:
        return base / p

    languages = data.get("languages")
    if (
        not isinstance(languages, list)
        or not languages
        or not all(isinstance(lang, str) and lang for lang in languages)
    ):
        raise BadConfigError(f"{path}: 'languages' must be a non-empty list of language codes")
    if len(set(languages)) != len(languages):
        raise BadConfigError(f"{path}: duplicate language codes in 'languages'")

    langid_tbl = data.get("langid", {})
    try:
        n_range = tuple(int(n) for n in langid_tbl.get("ngram_lengths", [1, 2, 3]))
        alpha = float(langid_tbl.get("alpha", 1.0))
        priors_tbl = langid_tbl.get("priors")
        priors = {k: float(v) for k, v in priors_tbl.items()} if priors_tbl else None
    except (TypeError, ValueError) as exc:
        raise BadConfigError(f"{path}: bad [langid] value: {exc}") from exc
    model_path = rel(langid_tbl["model"]) if "model" in langid_tbl else None
    train_paths = {
        lang: rel(p) for lang, p in langid_tbl.get("train", {}).items()
    }

    provider_tbl = data.get("provider", {})
    provider_kind = provider_tbl.get("kind", "hash")
    if provider_kind not in ("hash", "cache"):
        raise BadConfigError(f"{path}: provider kind must be 'hash' or 'cache'")
    try:
        if provider_kind == "hash":
            dim = int(provider_tbl.get("dim", 64))
        else:
            # For a cache provider the file's dim is authoritative; an explicit
            # dim here is only a consistency assertion.
            dim = int(provider_tbl["dim"]) if "dim" in provider_tbl else None
        seed = int(provider_tbl.get("seed", 0))
    except (TypeError, ValueError) as exc:
        raise BadConfigError(f"{path}: bad [provider] value: {exc}") from exc
    cache_path = rel(provider_tbl["path"]) if "path" in provider_tbl else None
    if provider_kind == "cache" and cache_path is None:
        raise BadConfigError(f"{path}: provider kind 'cache' requires 'path'")
    fallback = provider_tbl.get("fallback")
    if fallback not in (None, "hash"):
        raise BadConfigError(f"{path}: provider fallback must be 'hash' when present")

    aggregation = data.get("scorer", {}).get("aggregation", "mean")
    if aggregation not in AGGREGATIONS:
        raise BadConfigError(f"{path}: aggregation must be one of {AGGREGATIONS}")

    lexicon_tbl = data.get("lexicon", {})
    lexicons: dict[str, LexiconPaths] = {}
    for lang in languages:
        entry = lexicon_tbl.get(lang)
        if not isinstance(entry, dict) or "positive" not in entry or "negative" not in entry:
            raise BadConfigError(
                f"{path}: language {lang!r} needs [lexicon.{lang}] with positive and negative paths"
            )
        lexicons[lang] = LexiconPaths(rel(entry["positive"]), rel(entry["negative"]))

    return PipelineConfig(
        languages=tuple(languages),
        n_range=n_range,
        alpha=alpha,
        priors=priors,
        model_path=model_path,
        train_paths=train_paths,
        provider_kind=provider_kind,
        dim=dim,
        seed=seed,
        cache_path=cache_path,
        fallback=fallback,
        aggregation=aggregation,
        lexicons=lexicons,
    )


def build_provider(cfg: PipelineConfig) -> EmbeddingProvider:
    """Instantiate the configured embedding provider."""
    if cfg.provider_kind == "hash":
        return HashingProvider(cfg.dim, cfg.seed)
    cache = load_cache(cfg.cache_path)
    if cfg.dim is not None and cfg.dim != cache.dim:
        raise BadConfigError(
            f"configured provider dim {cfg.dim} disagrees with cache dim {cache.dim}"
        )
    fallback = HashingProvider(cache.dim, cfg.seed) if cfg.fallback == "hash" else None
    return CacheProvider(cache, fallback)


def load_model(cfg: PipelineConfig) -> NgramLanguageModel:
    if cfg.model_path is None:
        raise BadConfigError("config has no [langid] model path")
    return NgramLanguageModel.load(cfg.model_path)


def load_lexicons(cfg: PipelineConfig) -> dict:
    """Raw (unembedded) lexicons for every declared language."""
    return {
        lang: load_lexicon(paths.positive, paths.negative, lang)
        for lang, paths in cfg.lexicons.items()
    }


def load_embedded_lexicons(cfg: PipelineConfig, provider: EmbeddingProvider) -> dict[str, EmbeddedLexicon]:
    return {lang: embed_lexicon(provider, lex) for lang, lex in load_lexicons(cfg).items()}
