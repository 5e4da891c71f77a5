"""Token-level language identification with a character n-gram Naive Bayes model.

Tokens are scored by a multinomial Naive Bayes over padded character
n-grams (default n in {1, 2, 3}) with Laplace smoothing; the argmax label
per token then yields code-switch points wherever the label changes
between consecutive tokens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from mixlang.errors import (
    BadConfigError,
    EmptyCorpusError,
    EmptyTokenError,
    ParseError,
)

MODEL_HEADER = "NBLM v1"


@dataclass(frozen=True)
class TokenLabel:
    """Language decision for one token: index, argmax language, posterior."""

    index: int
    language: str
    posterior: float


def char_ngrams(token: str, n: int) -> list[str]:
    """Character n-grams of a token padded with n-1 boundary markers per side.

    n=1 therefore sees the raw characters with no padding.
    """
    padded = "^" * (n - 1) + token + "$" * (n - 1)
    return [padded[i : i + n] for i in range(len(padded) - n + 1)]


class NgramLanguageModel:
    """Multinomial Naive Bayes over padded character n-grams.

    Immutable once constructed; instances can be shared freely across
    threads.  Unseen n-grams share a single reserved UNK slot, so the
    smoothing denominator is ``total + alpha * (|vocab| + 1)``.
    """

    def __init__(
        self,
        languages: Sequence[str],
        n_range: Iterable[int],
        alpha: float,
        vocab: Iterable[str],
        counts: Mapping[str, Mapping[str, int]],
        totals: Mapping[str, int],
        priors: Mapping[str, float],
    ):
        self.languages = tuple(languages)
        self.n_range = tuple(sorted(set(n_range)))
        self.alpha = float(alpha)
        self.vocab = frozenset(vocab)
        self.counts = {lang: dict(counts.get(lang, {})) for lang in self.languages}
        self.totals = {lang: int(totals.get(lang, 0)) for lang in self.languages}
        self.priors = {lang: float(priors[lang]) for lang in self.languages}
        self._validate()

    def _validate(self) -> None:
        if len(self.languages) < 2:
            raise BadConfigError("need at least two languages")
        if len(set(self.languages)) != len(self.languages):
            raise BadConfigError("duplicate language codes")
        if not self.n_range:
            raise BadConfigError("n-gram length set is empty")
        if any(n < 1 for n in self.n_range):
            raise BadConfigError("n-gram lengths must be >= 1")
        if not self.alpha > 0:
            raise BadConfigError("smoothing constant alpha must be > 0")
        if any(not p > 0 for p in self.priors.values()):
            raise BadConfigError("priors must be positive")
        total_prior = math.fsum(self.priors.values())
        if abs(total_prior - 1.0) > 1e-9:
            raise BadConfigError(f"priors sum to {total_prior}, expected 1")

    # ------------------------------------------------------------------
    # training
    # ------------------------------------------------------------------

    @classmethod
    def train(
        cls,
        corpus: Mapping[str, Sequence[str]],
        n_range: Iterable[int] = (1, 2, 3),
        alpha: float = 1.0,
        priors: Mapping[str, float] | None = None,
    ) -> "NgramLanguageModel":
        """Train from per-language token lists.

        Priors default to per-language token counts; pass ``priors``
        (positive weights, normalized here) to override.
        """
        languages = tuple(corpus.keys())
        n_range = tuple(sorted(set(n_range)))
        if not n_range:
            raise BadConfigError("n-gram length set is empty")
        if not alpha > 0:
            raise BadConfigError("smoothing constant alpha must be > 0")
        if len(languages) < 2:
            raise BadConfigError("need at least two languages")

        counts: dict[str, dict[str, int]] = {}
        totals: dict[str, int] = {}
        token_counts: dict[str, int] = {}
        vocab: set[str] = set()
        for lang in languages:
            tokens = [t for t in corpus[lang] if t]
            if not tokens:
                raise EmptyCorpusError(lang)
            lang_counts: dict[str, int] = {}
            total = 0
            for token in tokens:
                for n in n_range:
                    for gram in char_ngrams(token, n):
                        lang_counts[gram] = lang_counts.get(gram, 0) + 1
                        total += 1
            vocab.update(lang_counts)
            counts[lang] = lang_counts
            totals[lang] = total
            token_counts[lang] = len(tokens)

        if priors is None:
            grand = sum(token_counts.values())
            prior_map = {lang: token_counts[lang] / grand for lang in languages}
        else:
            if set(priors) != set(languages):
                raise BadConfigError("prior override must cover exactly the declared languages")
            if any(not w > 0 for w in priors.values()):
                raise BadConfigError("prior weights must be positive")
            z = math.fsum(priors[lang] for lang in languages)
            prior_map = {lang: priors[lang] / z for lang in languages}

        return cls(languages, n_range, alpha, vocab, counts, totals, prior_map)

    # ------------------------------------------------------------------
    # scoring
    # ------------------------------------------------------------------

    def gram_probability(self, language: str, gram: str) -> float:
        """Smoothed P(gram | language); unseen grams get the shared UNK mass."""
        denom = self.totals[language] + self.alpha * (len(self.vocab) + 1)
        if gram in self.vocab:
            return (self.counts[language].get(gram, 0) + self.alpha) / denom
        return self.alpha / denom

    def token_grams(self, token: str) -> list[str]:
        """All padded n-grams of a token over the configured lengths."""
        return [g for n in self.n_range for g in char_ngrams(token, n)]

    def token_posterior(self, token: str) -> dict[str, float]:
        """Per-language posterior for one token, normalized to sum to 1.

        Log-space scoring; per-language log sums use fsum, which is
        order-independent, so symmetric training data produces exact ties.
        """
        if not token:
            raise EmptyTokenError("cannot classify an empty token")
        grams = self.token_grams(token)
        log_scores = []
        for lang in self.languages:
            terms = [math.log(self.priors[lang])]
            terms.extend(math.log(self.gram_probability(lang, g)) for g in grams)
            log_scores.append(math.fsum(terms))
        peak = max(log_scores)
        weights = [math.exp(s - peak) for s in log_scores]
        z = math.fsum(weights)
        return {lang: w / z for lang, w in zip(self.languages, weights)}

    def label_tokens(self, tokens: Sequence[str]) -> list[TokenLabel]:
        """Argmax label per token; ties break to the first declared language."""
        labels = []
        for i, token in enumerate(tokens):
            posterior = self.token_posterior(token)
            language = max(self.languages, key=posterior.__getitem__)
            labels.append(TokenLabel(i, language, posterior[language]))
        return labels

    # ------------------------------------------------------------------
    # persistence
    # ------------------------------------------------------------------

    def save(self, path) -> None:
        """Write the versioned model file (see ``load`` for the layout)."""
        lines = [MODEL_HEADER]
        lines.append("languages\t" + "\t".join(self.languages))
        lines.append("ngrams\t" + "\t".join(str(n) for n in self.n_range))
        lines.append(f"alpha\t{self.alpha!r}")
        for lang in self.languages:
            lines.append(f"prior\t{lang}\t{self.priors[lang]!r}")
        for lang in self.languages:
            for gram in sorted(self.counts[lang]):
                lines.append(f"count\t{lang}\t{_escape(gram)}\t{self.counts[lang][gram]}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path) -> "NgramLanguageModel":
        """Read a model file written by ``save``.

        Layout: a "NBLM v1" header, then tab-separated ``languages``,
        ``ngrams``, and ``alpha`` lines, one ``prior`` line per language,
        and one ``count`` line per (language, n-gram) pair with whitespace
        in n-grams escaped.
        """
        languages: list[str] = []
        n_range: list[int] = []
        alpha: float | None = None
        priors: dict[str, float] = {}
        counts: dict[str, dict[str, int]] = {}

        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.rstrip("\n").rstrip("\r")
                if lineno == 1:
                    if line != MODEL_HEADER:
                        raise ParseError(path, lineno, f"expected {MODEL_HEADER!r} header")
                    continue
                if not line:
                    continue
                fields = line.split("\t")
                try:
                    key = fields[0]
                    if key == "languages":
                        languages = fields[1:]
                    elif key == "ngrams":
                        n_range = [int(x) for x in fields[1:]]
                    elif key == "alpha":
                        alpha = float(fields[1])
                    elif key == "prior":
                        priors[fields[1]] = float(fields[2])
                    elif key == "count":
                        _, lang, gram, count = fields
                        counts.setdefault(lang, {})[_unescape(gram)] = int(count)
                    else:
                        raise ParseError(path, lineno, f"unknown directive {key!r}")
                except ParseError:
                    raise
                except (IndexError, ValueError) as exc:
                    raise ParseError(path, lineno, str(exc)) from exc

        if not languages or alpha is None or not n_range:
            raise ParseError(path, 0, "incomplete model file")
        if set(priors) != set(languages):
            raise ParseError(path, 0, "priors do not cover the declared languages")
        if not set(counts) <= set(languages):
            raise ParseError(path, 0, "counts reference undeclared languages")

        vocab = {g for lang_counts in counts.values() for g in lang_counts}
        totals = {lang: sum(counts.get(lang, {}).values()) for lang in languages}
        return cls(languages, n_range, alpha, vocab, counts, totals, priors)


def switch_points(labels: Sequence[TokenLabel]) -> list[int]:
    """Indices i >= 1 where the language differs from the previous token's."""
    return [
        labels[i].index
        for i in range(1, len(labels))
        if labels[i].language != labels[i - 1].language
    ]


def _escape(gram: str) -> str:
    return (
        gram.replace("\\", "\\\\")
        .replace("\t", "\\t")
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace(" ", "\\s")
    )


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            out.append({"\\": "\\", "t": "\t", "n": "\n", "r": "\r", "s": " "}.get(nxt, nxt))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)
