from pathlib import Path

import pytest

EN_TRAIN = [
    "good", "great", "happy", "nice", "love", "friend", "sunny", "weather",
    "bad", "awful", "sad", "gloomy", "hate", "rain", "the", "with",
]
ES_TRAIN = [
    "bueno", "genial", "feliz", "alegre", "amor", "amigo", "soleado", "tiempo",
    "malo", "triste", "odio", "lluvia", "horrible", "feo", "el", "con",
]

EN_POS = ["good", "great", "happy", "nice"]
EN_NEG = ["bad", "awful", "sad", "gloomy"]
ES_POS = ["bueno", "genial", "feliz", "alegre"]
ES_NEG = ["malo", "triste", "horrible", "feo"]

CORPUS_ROWS = [
    ("t1", "GOOD weather with @maria https://t.co/x #sunny", "positive"),
    ("t2", "bueno genial good great", "positive"),
    ("t3", "bad malo triste awful", "negative"),
    ("t4", "el tiempo feo con lluvia sad", "negative"),
    ("t5", "123 !!! 😀", "negative"),
    ("t6", "feliz amigo nice friend", "positive"),
]

CONFIG_TEMPLATE = """\
languages = ["en", "es"]

[langid]
ngram_lengths = [1, 2, 3]
alpha = 1.0
model = "model.nblm"

[langid.train]
en = "train_en.txt"
es = "train_es.txt"

[provider]
{provider}

[scorer]
aggregation = "mean"

[lexicon.en]
positive = "lex_en_pos.txt"
negative = "lex_en_neg.txt"

[lexicon.es]
positive = "lex_es_pos.txt"
negative = "lex_es_neg.txt"
"""

HASH_PROVIDER = 'kind = "hash"\ndim = 64\nseed = 0'


def write_lines(path: Path, lines) -> Path:
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_corpus_csv(path: Path, rows, with_label: bool = True) -> Path:
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "text", "label"] if with_label else ["id", "text"])
        for row_id, text, label in rows:
            writer.writerow([row_id, text, label] if with_label else [row_id, text])
    return path


class Project:
    """A throwaway on-disk pipeline project for CLI tests."""

    def __init__(self, root: Path, provider: str = HASH_PROVIDER):
        self.root = root
        self.config = root / "config.toml"
        self.config.write_text(CONFIG_TEMPLATE.format(provider=provider), encoding="utf-8")
        write_lines(root / "train_en.txt", EN_TRAIN)
        write_lines(root / "train_es.txt", ES_TRAIN)
        write_lines(root / "lex_en_pos.txt", EN_POS)
        write_lines(root / "lex_en_neg.txt", EN_NEG)
        write_lines(root / "lex_es_pos.txt", ES_POS)
        write_lines(root / "lex_es_neg.txt", ES_NEG)
        self.corpus = write_corpus_csv(root / "corpus.csv", CORPUS_ROWS)
        self.model = root / "model.nblm"

    def path(self, name: str) -> Path:
        return self.root / name


@pytest.fixture
def project(tmp_path) -> Project:
    return Project(tmp_path)
