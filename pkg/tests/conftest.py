import os
from unittest import mock

import pytest

from online_coloring.config import OracleLimits
from online_coloring.graph import OnlineInstance, build_graph


@pytest.fixture(autouse=True)
def pinned_oracle_limits():
    with mock.patch.dict(
        os.environ, {"OCL_ORACLE_LIMIT": "20", "OCL_ENUMERATION_LIMIT": "14"}
    ):
        yield


@pytest.fixture
def limits():
    return OracleLimits()


@pytest.fixture
def path_instance():
    """P_3 revealed end, end, middle: 0 - 1 - 2 with order 0, 2, 1."""
    return OnlineInstance(
        graph=build_graph(3, [(0, 1), (1, 2)]),
        order=(0, 2, 1),
        predictions={0: "a", 1: "b", 2: "a"},
    )
