import pytest

from halin_packer import enumerate_cubic_halin, random_cubic_halin

import oracles

ACCEPTANCE_LINES = []


def random_universe():
    """500 seeded instances cycling through 1..19 internal vertices."""
    return [random_cubic_halin(1 + i % 19, 7000 + i) for i in range(500)]


@pytest.fixture(scope="session")
def enumerated14():
    return enumerate_cubic_halin(14)


@pytest.fixture(scope="session")
def enumerated12(enumerated14):
    return [h for h in enumerated14 if h.order <= 12]


@pytest.fixture(scope="session")
def random500():
    return random_universe()


@pytest.fixture(scope="session")
def connected_le8(request):
    cache = request.config.cache
    key = "halin_packer/connected_le8"
    stored = cache.get(key, None)
    if stored is None:
        stored = [[n, [list(e) for e in edges]] for n, edges in oracles.connected_graphs(8)]
        cache.set(key, stored)
    return stored


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
