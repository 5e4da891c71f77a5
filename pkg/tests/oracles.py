"""Independent brute-force reimplementations used as test oracles.

Everything here is deliberately written from scratch against the
documented contracts — plain Python lists, explicit probability products,
no imports from mixlang — so tests can compare pipeline output against an
implementation that shares no code with it.
"""

from __future__ import annotations

import math

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
U64_MASK = (1 << 64) - 1


def fnv1a_64(data: bytes) -> int:
    h = FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * FNV_PRIME) & U64_MASK
    return h


def hash_embed(text: str, dim: int, seed: int) -> list[float]:
    """Signed trigram hashing per the documented recipe: single ^/$ padding,
    FNV-1a-64 XOR seed, sign from the top bit, bucket = hash mod dim,
    L2 normalization; empty text stays the zero vector."""
    vec = [0.0] * dim
    if not text:
        return vec
    padded = "^" + text + "$"
    for i in range(len(padded) - 2):
        h = fnv1a_64(padded[i : i + 3].encode("utf-8")) ^ (seed & U64_MASK)
        sign = 1.0 if (h >> 63) == 0 else -1.0
        vec[h % dim] += sign
    norm = math.sqrt(sum(x * x for x in vec))
    if norm == 0.0:
        return vec
    return [x / norm for x in vec]


def cosine(u, v) -> float:
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    return min(1.0, max(-1.0, dot / (nu * nv)))


def mean_set_cosine(seg_vec, word_vecs) -> float:
    return sum(cosine(seg_vec, w) for w in word_vecs) / len(word_vecs)


def padded_ngrams(token: str, n: int) -> list[str]:
    padded = "^" * (n - 1) + token + "$" * (n - 1)
    return [padded[i : i + n] for i in range(len(padded) - n + 1)]


def nb_posterior(corpus: dict, token: str, n_range, alpha: float, priors=None) -> dict:
    """Direct Naive Bayes: recompute counts from the corpus and evaluate the
    posterior with explicit probability products, no log space."""
    languages = list(corpus)
    counts = {lang: {} for lang in languages}
    totals = {lang: 0 for lang in languages}
    vocab = set()
    for lang in languages:
        for tok in corpus[lang]:
            if not tok:
                continue
            for n in n_range:
                for gram in padded_ngrams(tok, n):
                    counts[lang][gram] = counts[lang].get(gram, 0) + 1
                    totals[lang] += 1
                    vocab.add(gram)
    if priors is None:
        n_tokens = {lang: sum(1 for t in corpus[lang] if t) for lang in languages}
        grand = sum(n_tokens.values())
        priors = {lang: n_tokens[lang] / grand for lang in languages}

    scores = {}
    for lang in languages:
        denom = totals[lang] + alpha * (len(vocab) + 1)
        p = priors[lang]
        for n in n_range:
            for gram in padded_ngrams(token, n):
                if gram in vocab:
                    p *= (counts[lang].get(gram, 0) + alpha) / denom
                else:
                    p *= alpha / denom
        scores[lang] = p
    z = sum(scores.values())
    return {lang: s / z for lang, s in scores.items()}


def classify_segments(segments, lexicon_vecs) -> tuple[float, float, str]:
    """Brute-force polarity: segments is a list of (language, text); the
    lexicon_vecs map language -> (positive word vecs, negative word vecs),
    already embedded with ``hash_embed``.  Returns (pos, neg, label)."""
    pos_parts = []
    neg_parts = []
    dim = None
    for lang, text in segments:
        pos_vecs, neg_vecs = lexicon_vecs[lang]
        dim = len(pos_vecs[0])
        seg_vec = hash_embed(text, dim, 0)
        pos_parts.append(mean_set_cosine(seg_vec, pos_vecs))
        neg_parts.append(mean_set_cosine(seg_vec, neg_vecs))
    pos = math.fsum(pos_parts)
    neg = math.fsum(neg_parts)
    return pos, neg, ("Positive" if pos > neg else "Negative")
