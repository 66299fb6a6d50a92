"""Shared fixtures: the bundled example presentations and representations."""

import pytest

from propfox import corpus


@pytest.fixture(scope="session")
def eg41():
    return corpus.load_presentation("eg41.pres")


@pytest.fixture(scope="session")
def eg42():
    return corpus.load_presentation("eg42.pres")


@pytest.fixture(scope="session")
def eg43():
    return corpus.load_presentation("eg43.pres")


@pytest.fixture(scope="session")
def eg43split():
    return corpus.load_presentation("eg43split.pres")


@pytest.fixture(scope="session")
def eg44rep(eg41):
    return corpus.load_representation("eg44.rep", eg41)


@pytest.fixture(scope="session")
def eg45rep(eg41):
    return corpus.load_representation("eg45.rep", eg41)


@pytest.fixture(scope="session")
def eg55rep(eg41):
    return corpus.load_representation("eg55.rep", eg41)
