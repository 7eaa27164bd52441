"""Shared fixtures for induced-paths tests."""

import pytest

from induced_paths.generators import gen_named
from induced_paths.graph import Graph, build_graph
from induced_paths.types import GraphModel


@pytest.fixture
def c5() -> Graph:
    return gen_named(GraphModel.CYCLE, 5)


@pytest.fixture
def k4() -> Graph:
    return gen_named(GraphModel.COMPLETE, 4)


@pytest.fixture
def petersen() -> Graph:
    return gen_named(GraphModel.PETERSEN)


@pytest.fixture
def triangle() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])
