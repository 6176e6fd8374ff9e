import os
import unittest.mock
from typing import Any, List

import pytest
from click.testing import CliRunner

from lappoly.graphs import Graph, generate_family

mocked_vars: List[Any] = []


def pytest_configure(config):
    """
    Called after the Session object has been created and
    before performing collection and entering the run test loop.
    """
    global mocked_vars
    env_vars = unittest.mock.patch.dict(os.environ)
    env_vars.start()
    # reports must not depend on the caller's tolerance
    os.environ.pop("LAPPOLY_TOL", None)
    mocked_vars.append(env_vars)


def pytest_unconfigure(config):
    """
    Called after whole test run finished, right before
    returning the exit status to the system.
    """
    global mocked_vars
    for var in mocked_vars:
        var.stop()
    mocked_vars = []


@pytest.fixture(scope="class")
def runner():
    yield CliRunner()


@pytest.fixture
def k2() -> Graph:
    return generate_family("complete", [2])


@pytest.fixture
def triangle() -> Graph:
    return generate_family("cycle", [3])


@pytest.fixture
def c4() -> Graph:
    return generate_family("cycle", [4])


@pytest.fixture
def k4() -> Graph:
    return generate_family("complete", [4])


@pytest.fixture
def p3() -> Graph:
    return generate_family("path", [3])


@pytest.fixture
def p4() -> Graph:
    return generate_family("path", [4])


@pytest.fixture
def star3() -> Graph:
    return generate_family("star", [3])


@pytest.fixture
def paw() -> Graph:
    # a triangle with a pendant vertex at 2
    return Graph(4, ((0, 1), (0, 2), (1, 2), (2, 3)))
