#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths — trigram hash embedding and set-cosine
similarity — at corpus-realistic sizes and prints the speedup.

Run: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import string
import time

import numpy as np

from mixlang.kernels import _pure

try:
    from mixlang.kernels import _native
except ImportError:
    _native = None


def _best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _words(rng: random.Random, count: int) -> list[str]:
    return [
        "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(3, 12)))
        for _ in range(count)
    ]


def bench_hash_embed(quick: bool) -> list[tuple[str, float, float]]:
    rng = random.Random(7)
    n_texts = 200 if quick else 2000
    texts = [" ".join(_words(rng, rng.randint(2, 8))) for _ in range(n_texts)]
    rows = []
    for dim in (64, 512):
        pure_t = _best_of(lambda: [_pure.hash_embed(t, dim, 0) for t in texts], 3)
        native_t = (
            _best_of(lambda: [_native.hash_embed(t, dim, 0) for t in texts], 3)
            if _native
            else float("nan")
        )
        rows.append((f"hash_embed x{n_texts} (dim {dim})", pure_t, native_t))
    return rows


def bench_mean_cosine(quick: bool) -> list[tuple[str, float, float]]:
    rng = np.random.default_rng(7)
    rows = []
    for dim, lexicon_size, queries in ((64, 2000, 50), (512, 4000, 20)):
        if quick:
            lexicon_size //= 10
        lex = rng.standard_normal((lexicon_size, dim))
        qs = rng.standard_normal((queries, dim))
        pure_t = _best_of(lambda: [_pure.mean_cosine(q, lex) for q in qs], 3)
        native_t = (
            _best_of(lambda: [_native.mean_cosine(q, lex) for q in qs], 3)
            if _native
            else float("nan")
        )
        rows.append((f"mean_cosine x{queries} ({lexicon_size} words, dim {dim})", pure_t, native_t))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes, faster run")
    args = parser.parse_args()

    if _native is None:
        print("compiled kernels not built; timing the pure backend only\n")

    rows = bench_hash_embed(args.quick) + bench_mean_cosine(args.quick)
    width = max(len(name) for name, _, _ in rows)
    header = f"{'kernel':<{width}}  {'pure':>10}  {'native':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, pure_t, native_t in rows:
        speedup = pure_t / native_t if native_t == native_t else float("nan")
        print(f"{name:<{width}}  {pure_t * 1e3:>8.2f}ms  {native_t * 1e3:>8.2f}ms  {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
