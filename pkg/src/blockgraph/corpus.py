"""Access to the bundled character table corpus.

Tables live as JSON files inside the package; the BLOCKGRAPH_CORPUS
environment variable points lookups at a different directory instead.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .chartab import CharacterTable, load_table

__all__ = ["corpus_dir", "corpus_names", "corpus_path", "load_corpus_table", "resolve_table_path"]

_ENV_VAR = "BLOCKGRAPH_CORPUS"


def corpus_dir() -> Path:
    override = os.environ.get(_ENV_VAR)
    if override:
        return Path(override)
    return Path(resources.files("blockgraph") / "corpusdata")


def corpus_names() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob("*.json"))


def corpus_path(name: str) -> Path:
    return corpus_dir() / f"{name}.json"


def load_corpus_table(name: str) -> CharacterTable:
    path = corpus_path(name)
    if not path.exists():
        raise FileNotFoundError(f"no corpus table {name!r} in {corpus_dir()}")
    return load_table(path)


def resolve_table_path(spec: str) -> Path:
    """A CLI table argument: an existing file path, or a corpus name."""
    path = Path(spec)
    if path.exists():
        return path
    fallback = corpus_path(spec.removesuffix(".json"))
    if fallback.exists():
        return fallback
    raise FileNotFoundError(f"{spec!r} is neither a file nor a corpus table name")
