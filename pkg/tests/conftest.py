import functools

import pytest

from nestex.corpus import corpus


@functools.lru_cache(maxsize=None)
def _small():
    return tuple(corpus("small"))


@pytest.fixture(scope="session")
def small_corpus():
    return _small()


def by_key(key):
    for inst in _small():
        if inst.key == key:
            return inst
    raise KeyError(key)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    res = getattr(mod, "RESULTS", None)
    if not res:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(res):
        terminalreporter.write_line(res[n])
