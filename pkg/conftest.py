"""Pytest configuration and fixtures."""
import json
import logging

import pytest

from rigiditylab.frameworks.models import Framework, Graph, SpaceDescriptor
from rigiditylab.frameworks.sampling import random_configuration


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep RIGIDITYLAB_* settings out of the tests and reset package logging afterwards."""
    for name in (
        "RIGIDITYLAB_SEED",
        "RIGIDITYLAB_BOUND",
        "RIGIDITYLAB_RETRIES",
        "RIGIDITYLAB_SKEW_BOUND",
        "RIGIDITYLAB_STARTS",
        "RIGIDITYLAB_DEDUP_TOL",
        "RIGIDITYLAB_RESIDUAL_TOL",
        "RIGIDITYLAB_ROTATION_TOL",
        "RIGIDITYLAB_LOG_LEVEL",
        "RIGIDITYLAB_LOG_COLORS",
    ):
        monkeypatch.delenv(name, raising=False)
    yield
    package_logger = logging.getLogger("rigiditylab")
    for handler in package_logger.handlers[:]:
        package_logger.removeHandler(handler)
    package_logger.setLevel(logging.NOTSET)


@pytest.fixture
def k4():
    """Complete graph on 4 vertices."""
    return Graph.complete(4)


@pytest.fixture
def k4_plus_degree_two():
    """K4 with a fifth vertex joined to vertices 0 and 1."""
    return Graph.complete(4).with_vertex([0, 1])


@pytest.fixture
def triangle():
    """Cycle on 3 vertices."""
    return Graph.cycle(3)


@pytest.fixture
def path3():
    """Path on 3 vertices."""
    return Graph.path(3)


@pytest.fixture
def path4():
    """Path on 4 vertices."""
    return Graph.path(4)


@pytest.fixture
def cycle4():
    """Cycle on 4 vertices."""
    return Graph.cycle(4)


@pytest.fixture
def battery():
    """Small graphs with their plane verdicts, name -> (graph, globally rigid)."""
    return {
        "K4": (Graph.complete(4), True),
        "K5": (Graph.complete(5), True),
        "W4": (Graph.wheel(4), True),
        "W5": (Graph.wheel(5), True),
        "W6": (Graph.wheel(6), True),
        "K4+deg2": (Graph.complete(4).with_vertex([0, 1]), False),
        "K4+deg3": (Graph.complete(4).with_vertex([0, 1, 2]), True),
        "K5+deg2": (Graph.complete(5).with_vertex([0, 1]), False),
        "K5+deg3": (Graph.complete(5).with_vertex([0, 1, 2]), True),
        "prism": (Graph.prism(3), False),
        "prism+diagonal": (Graph(6, list(Graph.prism(3).edges) + [(0, 4)]), True),
        "K33": (Graph.complete_bipartite(3, 3), False),
        "K33+edge": (Graph(6, list(Graph.complete_bipartite(3, 3).edges) + [(0, 1)]), True),
        "K4 glued K4": (Graph(6, list(Graph.complete(4).edges) + [(0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]), False),
    }


@pytest.fixture
def plane():
    """Euclidean plane."""
    return SpaceDescriptor.euclidean(2)


@pytest.fixture
def unit_triangle(triangle, plane):
    """Triangle at (0,0), (1,0), (0,1)."""
    return Framework.build(triangle, [(0, 0), (1, 0), (0, 1)], plane)


@pytest.fixture
def generic_k4(k4, plane):
    """K4 at a seeded generic configuration."""
    return Framework(k4, random_configuration(4, plane, seed=7, bound=50), plane)


@pytest.fixture
def write_json(tmp_path):
    """Write a payload to a JSON file under tmp_path and return its path."""

    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write
