from functools import lru_cache

import numpy as np
import pytest

from charring.fixtures import fixture_names, load_fixture

ALL_FIXTURES = fixture_names()
SMALL_FIXTURES = [n for n in ALL_FIXTURES if n not in ("g768", "n768")]


@lru_cache(maxsize=None)
def table(name):
    return load_fixture(name)


def fixture_primes(name):
    return table(name).primes


FIXTURE_PRIME_PAIRS = [(n, p) for n in ALL_FIXTURES for p in fixture_primes(n)]


def to_complex(v):
    """Numeric value of a Cyclotomic (independent of the exact arithmetic)."""
    n = v.conductor
    return sum(float(c) * np.exp(2j * np.pi * e / n) for e, c in enumerate(v.coeffs))


def complex_table(name):
    t = table(name)
    return np.array([[to_complex(v) for v in row] for row in t.irreducibles])


@pytest.fixture
def S3():
    return table("S3")


# -- acceptance reporting: one PASS/FAIL line per criterion ---------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    number, title = marker.args
    status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
    if _criteria.get(number, ("PASS",))[0] == "PASS" or status == "FAIL":
        _criteria[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
