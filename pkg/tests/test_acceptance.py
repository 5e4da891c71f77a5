"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (visible with ``pytest -s`` or on failure).

The full-corpus accuracy figure for the real bilingual tweet dataset is
not reproducible at desk scale (external dataset, full pretrained
encoders); its stand-ins here are the property-based pipeline criteria.
"""

import contextlib
import json
import math
import random
import time

import numpy as np
import pytest

from mixlang.cli import main as cli_main
from mixlang.embeddings import (
    EmbeddingCache,
    HashingProvider,
    cosine,
    hash_embed,
    load_cache,
    save_cache,
)
from mixlang.errors import ParseError
from mixlang.evaluation import (
    ConfusionMatrix,
    compare_reports,
    metrics_from_matrix,
    report_from_dict,
)
from mixlang.langid import NgramLanguageModel, switch_points
from mixlang.lexicon import SentimentLexicon, embed_lexicon
from mixlang.scorer import NEGATIVE, POSITIVE, classify_text
from mixlang.segmenter import segment
from mixlang.textprep import RawText, normalize, tokenize

import oracles
from conftest import write_corpus_csv, write_lines

TOLERANCE_PP = 0.05  # percentage points


@contextlib.contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[acceptance] {name}: FAIL")
        raise
    print(f"[acceptance] {name}: PASS")


# ----------------------------------------------------------------------
# metric arithmetic against the pinned reference runs
# ----------------------------------------------------------------------


def test_metrics_xlmr_reference():
    with criterion("metrics-xlmr-reference"):
        matrix = ConfusionMatrix(pp_tp=429, pp_tn=201, pn_tp=160, pn_tn=624)
        report = metrics_from_matrix(matrix)
        assert report.accuracy * 100 == pytest.approx(74.5, abs=TOLERANCE_PP)
        assert report.macro_f1 * 100 == pytest.approx(74.0, abs=TOLERANCE_PP)

        metrics_from_matrix(matrix)  # warmup
        best = min(
            _timed(lambda: metrics_from_matrix(matrix)) for _ in range(100)
        )
        assert best < 1e-3, f"metrics took {best * 1e3:.3f} ms"


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_metrics_use_reference():
    with criterion("metrics-use-reference"):
        report = metrics_from_matrix(ConfusionMatrix(pp_tp=553, pp_tn=77, pn_tp=321, pn_tn=463))
        assert report.accuracy * 100 == pytest.approx(71.9, abs=TOLERANCE_PP)
        assert report.macro_f1 * 100 == pytest.approx(71.7, abs=TOLERANCE_PP)


def test_baseline_deltas():
    with criterion("baseline-deltas"):
        candidate = report_from_dict({"accuracy": 0.745, "macro_f1": 0.740})
        baseline = report_from_dict({"accuracy": 0.633, "macro_f1": 0.6236})
        delta = compare_reports(candidate, baseline)
        assert delta.accuracy_pp == pytest.approx(11.2, abs=TOLERANCE_PP)
        assert delta.macro_f1_pp == pytest.approx(11.64, abs=TOLERANCE_PP)


def test_full_corpus_reproduction_not_attempted():
    print("[acceptance] full-corpus-reproduction: SKIP (external dataset and "
          "pretrained encoders required; covered by the property criteria below)")
    pytest.skip("requires the external tweet corpus and full pretrained encoders")


# ----------------------------------------------------------------------
# Naive Bayes brute-force equivalence sweep
# ----------------------------------------------------------------------


def _sweep_cases():
    rng = random.Random(20240)
    n_range_choices = [(1,), (1, 2), (1, 2, 3), (2,), (2, 3)]
    for n_langs, alphabet in ((2, "ab"), (3, "abc")):
        for n_range in n_range_choices:
            for alpha in (0.5, 1.0, 2.0):
                for _ in range(3):
                    languages = [f"l{i}" for i in range(n_langs)]
                    budget = rng.randint(n_langs, 10)
                    counts = [1] * n_langs
                    for _ in range(budget - n_langs):
                        counts[rng.randrange(n_langs)] += 1
                    corpus = {
                        lang: [
                            "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
                            for _ in range(count)
                        ]
                        for lang, count in zip(languages, counts)
                    }
                    queries = [
                        "".join(rng.choice(alphabet + "z") for _ in range(rng.randint(1, 4)))
                        for _ in range(4)
                    ]
                    yield corpus, n_range, alpha, queries


def test_naive_bayes_brute_force_sweep():
    with criterion("naive-bayes-brute-force"):
        t0 = time.perf_counter()

        # hand-computed fixtures first
        model = NgramLanguageModel.train({"en": ["aa"], "es": ["bb"]}, n_range={1})
        assert model.token_posterior("aa")["en"] == pytest.approx(0.9, abs=1e-9)
        assert model.token_posterior("ab")["en"] == pytest.approx(0.5, abs=1e-9)
        assert model.token_posterior("zz")["en"] == pytest.approx(0.5, abs=1e-9)

        models = 0
        for corpus, n_range, alpha, queries in _sweep_cases():
            model = NgramLanguageModel.train(corpus, n_range=n_range, alpha=alpha)
            models += 1
            for token in queries:
                expected = oracles.nb_posterior(corpus, token, n_range, alpha)
                got = model.token_posterior(token)
                for lang in corpus:
                    assert got[lang] == pytest.approx(expected[lang], abs=1e-9)

        elapsed = time.perf_counter() - t0
        assert models == 90  # 2 language arities x 5 n-gram ranges x 3 alphas x 3 draws
        assert elapsed < 1.0, f"sweep took {elapsed:.2f} s"


# ----------------------------------------------------------------------
# synthetic bilingual corpora (shared by the two pipeline criteria)
# ----------------------------------------------------------------------

ALPHA_A = "abcdefghijklm"
ALPHA_B = "nopqrstuvwxyz"


def _make_words(rng, alphabet, count, taken):
    words = []
    while len(words) < count:
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(4, 7)))
        if word not in taken:
            taken.add(word)
            words.append(word)
    return words


def _toy_setup(seed):
    """Two synthetic languages with disjoint alphabets, plus pos/neg lexicons
    and filler vocabulary for each."""
    rng = random.Random(seed)
    taken = set()
    vocab = {
        "en": {
            "pos": _make_words(rng, ALPHA_A, 12, taken),
            "neg": _make_words(rng, ALPHA_A, 12, taken),
            "fill": _make_words(rng, ALPHA_A, 16, taken),
        },
        "es": {
            "pos": _make_words(rng, ALPHA_B, 12, taken),
            "neg": _make_words(rng, ALPHA_B, 12, taken),
            "fill": _make_words(rng, ALPHA_B, 16, taken),
        },
    }
    return rng, vocab


def _train_corpus(vocab, with_fill=True):
    return {
        lang: sets["pos"] + sets["neg"] + (sets["fill"] if with_fill else [])
        for lang, sets in vocab.items()
    }


def _project_files(tmp_path, vocab, rows):
    write_lines(tmp_path / "train_en.txt", _train_corpus(vocab)["en"])
    write_lines(tmp_path / "train_es.txt", _train_corpus(vocab)["es"])
    write_lines(tmp_path / "lex_en_pos.txt", vocab["en"]["pos"])
    write_lines(tmp_path / "lex_en_neg.txt", vocab["en"]["neg"])
    write_lines(tmp_path / "lex_es_pos.txt", vocab["es"]["pos"])
    write_lines(tmp_path / "lex_es_neg.txt", vocab["es"]["neg"])
    config = tmp_path / "config.toml"
    config.write_text(
        """\
languages = ["en", "es"]

[langid]
ngram_lengths = [1, 2, 3]
alpha = 1.0
model = "model.nblm"

[langid.train]
en = "train_en.txt"
es = "train_es.txt"

[provider]
kind = "hash"
dim = 64
seed = 0

[scorer]
aggregation = "mean"

[lexicon.en]
positive = "lex_en_pos.txt"
negative = "lex_en_neg.txt"

[lexicon.es]
positive = "lex_es_pos.txt"
negative = "lex_es_neg.txt"
""",
        encoding="utf-8",
    )
    corpus = write_corpus_csv(tmp_path / "corpus.csv", rows)
    return config, corpus


def test_pipeline_invariants_on_synthetic_corpus(tmp_path):
    with criterion("pipeline-invariants-1k"):
        t0 = time.perf_counter()
        rng, vocab = _toy_setup(seed=31415)
        pool = {
            lang: sets["pos"] + sets["neg"] + sets["fill"]
            for lang, sets in vocab.items()
        }

        rows = []
        for i in range(1000):
            if i % 100 == 99:  # a few rows that normalize to nothing
                rows.append((f"s{i}", "1234 !!! 😀 @noise", "negative"))
                continue
            length = rng.randint(3, 12)
            tokens = [rng.choice(pool[rng.choice(("en", "es"))]) for _ in range(length)]
            rows.append((f"s{i}", " ".join(tokens), rng.choice(("positive", "negative"))))

        config, corpus = _project_files(tmp_path, vocab, rows)
        assert cli_main(["train-langid", "--config", str(config)]) == 0

        # API-level invariants on every record
        model = NgramLanguageModel.load(tmp_path / "model.nblm")
        provider = HashingProvider(64, seed=0)
        lexicons = {
            lang: embed_lexicon(
                provider,
                SentimentLexicon(lang, tuple(vocab[lang]["pos"]), tuple(vocab[lang]["neg"])),
            )
            for lang in ("en", "es")
        }
        for row_id, text, _ in rows:
            tokens = tokenize(normalize(text))
            score = classify_text(RawText(row_id, text), model, provider, lexicons)
            if not tokens:
                assert score.pos_total == 0.0 and score.neg_total == 0.0
                assert score.label == NEGATIVE
                continue
            labels = model.label_tokens(tokens)
            segs = segment(tokens, labels)
            assert segs[0].start == 0 and segs[-1].end == len(tokens)
            assert all(a.end == b.start for a, b in zip(segs, segs[1:]))
            assert all(a.language != b.language for a, b in zip(segs, segs[1:]))
            assert len(segs) == len(switch_points(labels)) + 1
            assert abs(score.pos_total - math.fsum(s.positive for s in score.per_segment)) <= 1e-9
            assert abs(score.neg_total - math.fsum(s.negative for s in score.per_segment)) <= 1e-9
            assert (score.label == POSITIVE) == (score.pos_total > score.neg_total)

        # determinism: two CLI runs produce byte-identical JSONL
        out_a, out_b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        for out in (out_a, out_b):
            assert cli_main([
                "classify", "--config", str(config),
                "--input", str(corpus), "--output", str(out),
            ]) == 0
        assert out_a.read_bytes() == out_b.read_bytes()
        assert len(out_a.read_text(encoding="utf-8").splitlines()) == 1000

        elapsed = time.perf_counter() - t0
        assert elapsed < 30.0, f"invariant suite took {elapsed:.1f} s"


def test_separability_sanity(tmp_path):
    with criterion("separability-sanity"):
        rng, vocab = _toy_setup(seed=27182)
        model = NgramLanguageModel.train(_train_corpus(vocab, with_fill=False))
        provider = HashingProvider(64, seed=0)
        lexicons = {
            lang: embed_lexicon(
                provider,
                SentimentLexicon(lang, tuple(vocab[lang]["pos"]), tuple(vocab[lang]["neg"])),
            )
            for lang in ("en", "es")
        }

        # oracle-side lexicon embeddings, recomputed from scratch
        oracle_lex = {
            lang: (
                [oracles.hash_embed(w, 64, 0) for w in vocab[lang]["pos"]],
                [oracles.hash_embed(w, 64, 0) for w in vocab[lang]["neg"]],
            )
            for lang in ("en", "es")
        }

        def make_sentence(side):
            length = rng.randint(4, 10)
            toks = []
            langs = []
            for _ in range(length):
                lang = rng.choice(("en", "es"))
                toks.append(rng.choice(vocab[lang][side]))
                langs.append(lang)
            return toks, langs

        correct = 0
        for i in range(200):
            side = "pos" if i < 100 else "neg"
            gold = POSITIVE if side == "pos" else NEGATIVE
            toks, langs = make_sentence(side)

            # oracle label from construction-known segments
            oracle_segments = []
            start = 0
            for j in range(1, len(toks) + 1):
                if j == len(toks) or langs[j] != langs[start]:
                    oracle_segments.append((langs[start], " ".join(toks[start:j])))
                    start = j
            o_pos, o_neg, o_label = oracles.classify_segments(oracle_segments, oracle_lex)

            score = classify_text(RawText(f"x{i}", " ".join(toks)), model, provider, lexicons)
            assert score.label == o_label, f"pipeline disagrees with oracle on {toks}"
            assert score.pos_total == pytest.approx(o_pos, abs=1e-9)
            assert score.neg_total == pytest.approx(o_neg, abs=1e-9)
            if score.label == gold:
                correct += 1

        accuracy = correct / 200
        assert accuracy >= 0.95, f"separability accuracy {accuracy:.3f}"


# ----------------------------------------------------------------------
# cosine and cache properties
# ----------------------------------------------------------------------


def test_cosine_property_suite():
    with criterion("cosine-properties-10k"):
        rng = np.random.default_rng(161803)
        for _ in range(10_000):
            d = int(rng.integers(2, 129))
            u = rng.standard_normal(d)
            v = rng.standard_normal(d)
            c = cosine(u, v)
            assert -1.0 <= c <= 1.0
            assert cosine(v, u) == c
            a, b = rng.uniform(1e-3, 1e3, size=2)
            assert abs(cosine(a * u, b * v) - c) <= 1e-9


def test_cache_round_trip_and_parse_errors(tmp_path):
    with criterion("cache-round-trip"):
        rng = np.random.default_rng(577215)
        dim = 24
        cache = EmbeddingCache(dim=dim)
        expected = {}
        for i in range(1000):
            key = (f"frase número {i}", "es" if i % 3 else "en")
            vec = rng.standard_normal(dim).astype(np.float32).astype(np.float64)
            cache.put(*key, vec)
            expected[key] = vec
        path = tmp_path / "cache.jsonl"
        save_cache(cache, path)
        loaded = load_cache(path)
        assert len(loaded) == 1000
        for (text, lang), vec in expected.items():
            got = loaded.get(text, lang)
            assert got is not None and np.array_equal(got, vec)

        good = '{"text":"ok","lang":"en","dim":2,"vec":[1.0,0.0]}'
        fixtures = [
            (3, good + "\n" + good.replace("ok", "k2") + "\n" + "{broken\n"),
            (2, good + "\n" + '{"text":"a","lang":"en","dim":2,"vec":[1.0,"x"]}\n'),
            (1, '{"text":"a","lang":"en"}\n'),
        ]
        for want_line, content in fixtures:
            bad = tmp_path / f"bad{want_line}.jsonl"
            bad.write_text(content, encoding="utf-8")
            with pytest.raises(ParseError) as err:
                load_cache(bad)
            assert err.value.line_number == want_line
