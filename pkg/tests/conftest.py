import pytest

from blockgraph.corpus import corpus_names, load_corpus_table

BUNDLED_SMALL = [
    "C2", "C6", "C12", "S3", "S4", "A4", "D8", "Q8", "SL23",
    "A5", "S5", "A6", "L2_7", "L2_11",
]
INGESTED = ["L5_2", "J1", "Sz8"]


@pytest.fixture(scope="session")
def corpus():
    cache = {}

    def load(name):
        if name not in cache:
            cache[name] = load_corpus_table(name)
        return cache[name]

    return load


@pytest.fixture(scope="session")
def all_corpus_names():
    names = corpus_names()
    for required in BUNDLED_SMALL + INGESTED:
        assert required in names
    return names
