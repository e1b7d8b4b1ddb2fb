"""Shared fixtures: the two bundled instances and their exact fronts."""

import pytest

from pairsched.cli import bundled_instance_path, load_problem
from pairsched.oracle import enumerate_front


@pytest.fixture(scope="session")
def example1():
    return load_problem(bundled_instance_path("example1"))


@pytest.fixture(scope="session")
def example2():
    return load_problem(bundled_instance_path("example2"))


@pytest.fixture(scope="session")
def example1_front(example1):
    return enumerate_front(example1)


@pytest.fixture(scope="session")
def example2_front(example2):
    # ~10 s: scans all 10! permutations twice.  Computed once per session.
    return enumerate_front(example2)
