"""Cross-package conformance: exporter output must be a valid pipeline cache.

The two packages share only the file formats; these tests drive the
exporter CLI end to end (with a stubbed encoder registry) and then read
the result with the consuming package's loader.
"""

import json
import os

import pytest

from mixlang_exporter.cli import main as cli_main

from exporter_stubs import StubEncoder

mixlang_embeddings = pytest.importorskip(
    "mixlang.embeddings", reason="consuming package not installed"
)


@pytest.fixture
def stub_registry(monkeypatch):
    from mixlang_exporter import encoders

    monkeypatch.setitem(encoders.ENCODER_FACTORIES, "xlmr", StubEncoder)


def write_manifest(path, entries):
    with open(path, "w", encoding="utf-8") as fh:
        for text, lang in entries:
            fh.write(json.dumps({"text": text, "lang": lang}, ensure_ascii=False) + "\n")
    return path


def test_fifty_entry_manifest_loads_with_zero_misses(tmp_path, stub_registry):
    entries = [(f"segmento de prueba número {i} ñ", "es" if i % 2 else "en")
               for i in range(50)]
    manifest = write_manifest(tmp_path / "manifest.jsonl", entries)
    out = tmp_path / "cache.jsonl"

    assert cli_main(["--manifest", str(manifest), "--out", str(out), "--model", "xlmr"]) == 0

    cache = mixlang_embeddings.load_cache(out)
    assert len(cache) == 50
    for text, lang in entries:
        assert cache.get(text, lang) is not None, f"miss for ({text!r}, {lang!r})"


def test_duplicate_manifest_entries_deduplicate(tmp_path, stub_registry):
    entries = [("hola mundo", "es")] * 3 + [("good day", "en")] * 2
    manifest = write_manifest(tmp_path / "manifest.jsonl", entries)
    out = tmp_path / "cache.jsonl"

    assert cli_main(["--manifest", str(manifest), "--out", str(out), "--model", "xlmr"]) == 0

    cache = mixlang_embeddings.load_cache(out)
    assert len(cache) == 2
    assert cache.get("hola mundo", "es") is not None
    assert cache.get("good day", "en") is not None


def test_unknown_model_id_exits_nonzero_without_output(tmp_path):
    manifest = write_manifest(tmp_path / "manifest.jsonl", [("a", "en")])
    out = tmp_path / "cache.jsonl"
    code = cli_main(["--manifest", str(manifest), "--out", str(out), "--model", "nonexistent"])
    assert code != 0
    assert not out.exists()


def test_cache_provider_serves_exported_vectors(tmp_path, stub_registry):
    entries = [("feliz y contento", "es"), ("happy and glad", "en")]
    manifest = write_manifest(tmp_path / "manifest.jsonl", entries)
    out = tmp_path / "cache.jsonl"
    assert cli_main(["--manifest", str(manifest), "--out", str(out), "--model", "xlmr"]) == 0

    cache = mixlang_embeddings.load_cache(out)
    provider = mixlang_embeddings.CacheProvider(cache)
    for text, lang in entries:
        vec = provider.embed(text, lang)
        assert vec.shape == (cache.dim,)


@pytest.mark.skipif(
    not os.environ.get("MIXLANG_EXPORTER_REAL_MODEL"),
    reason="set MIXLANG_EXPORTER_REAL_MODEL=1 to download and run a real encoder",
)
def test_real_model_round_trip(tmp_path):
    entries = [("hola mundo", "es"), ("hello world", "en")]
    manifest = write_manifest(tmp_path / "manifest.jsonl", entries)
    out = tmp_path / "cache.jsonl"
    assert cli_main(["--manifest", str(manifest), "--out", str(out), "--model", "xlmr"]) == 0
    cache = mixlang_embeddings.load_cache(out)
    assert len(cache) == 2
