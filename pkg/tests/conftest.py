from pathlib import Path

import pytest

import senselex as sx

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def core_lexicon() -> sx.Lexicon:
    return sx.load_lexicon(FIXTURES / "hi_core.tsv", "hi")


@pytest.fixture(scope="session")
def labeled_lexicon() -> sx.Lexicon:
    return sx.load_lexicon(FIXTURES / "hi_labeled.tsv", "hi")


@pytest.fixture(scope="session")
def gold_lexicon() -> sx.Lexicon:
    return sx.load_lexicon(FIXTURES / "hi_gold.tsv", "hi")


@pytest.fixture(scope="session")
def space() -> sx.EmbeddingSpace:
    return sx.load_vectors(FIXTURES / "hi_vectors.vec")


@pytest.fixture(scope="session")
def corpus_sentences() -> list[sx.ParsedSentence]:
    return sx.parse_conllu(FIXTURES / "hi_corpus.conllu")
