"""Shared fixtures: the bundled corpus, loaded once per session."""
from importlib import resources
from pathlib import Path

import pytest

from starclean.cli import load_spec


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return Path(str(resources.files("starclean").joinpath("corpus")))


@pytest.fixture(scope="session")
def corpus(corpus_dir):
    """name -> (StarRing, Aux) for every bundled spec."""
    out = {}
    for path in sorted(corpus_dir.glob("*.json")):
        name, S, aux = load_spec(path)
        out[name] = (S, aux)
    return out
