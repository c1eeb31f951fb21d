import pytest

from gkmcalc.corpus import CORPUS


@pytest.fixture(scope="session")
def spaces():
    return {name: entry.space() for name, entry in CORPUS.items()}


@pytest.fixture(params=sorted(CORPUS))
def corpus_name(request):
    return request.param
