"""Shared fixtures: a deterministic hypothesis profile and cached toric ideals."""

from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from toricsing.dynkin import ade_configuration, closed_form_configuration
from toricsing.algebra import TermOrder, certify_marked
from toricsing.paperdata import paper_basis, paper_order
from toricsing.toric import toric_ideal

settings.register_profile(
    "fixed",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fixed")


@lru_cache(maxsize=None)
def configuration(kind: str, n: int, lipman: bool = False):
    if kind == "A" or lipman:
        return ade_configuration(kind, n)
    return closed_form_configuration(kind, n)


@lru_cache(maxsize=None)
def ideal(kind: str, n: int, lipman: bool = False):
    return toric_ideal(configuration(kind, n, lipman))


@lru_cache(maxsize=None)
def paper_ideal(kind: str, n: int):
    """Toric ideal of a transcribed table's configuration, in the order the table is marked for."""
    table = paper_basis(kind, n)
    order = paper_order(kind) or TermOrder.weight(certify_marked(table.elements))
    return toric_ideal(table.config, order)


@pytest.fixture(scope="session")
def get_ideal():
    return ideal


@pytest.fixture(scope="session")
def get_config():
    return configuration


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
