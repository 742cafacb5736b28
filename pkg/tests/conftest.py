import pytest

from app.db.corpus_store import CorpusStore
from app.models.quiver import Arrow, Quiver
from app.services.algebra_service import build_algebra
from app.services.parser_service import parse_algebra_file

_LOADED = {}


def load_corpus(name: str):
    """(algebra, caps) for a bundled corpus file, built once per test session."""
    if name not in _LOADED:
        store = CorpusStore()
        _LOADED[name] = parse_algebra_file(store.read(store.get_path(name)))
    return _LOADED[name]


def corpus_names():
    return [path.rsplit("/", 1)[-1][: -len(CorpusStore.SUFFIX)] for path in CorpusStore().list_files()]


@pytest.fixture
def corpus():
    return lambda name: load_corpus(name)[0]


@pytest.fixture
def a2():
    return load_corpus("a2")[0]


@pytest.fixture
def kx2():
    return load_corpus("k_x2")[0]


@pytest.fixture
def kx3():
    return load_corpus("k_x3")[0]


@pytest.fixture
def auslander2():
    return load_corpus("auslander_x2")[0]


@pytest.fixture
def semisimple():
    return build_algebra(Quiver(1, ()), [], p=101, name="semisimple")


@pytest.fixture
def a2_small_prime():
    return build_algebra(Quiver(2, (Arrow("a", 0, 1),)), [], p=3, name="A2 over F_3")
