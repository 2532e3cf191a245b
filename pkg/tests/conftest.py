from __future__ import annotations

from pathlib import Path

import pytest

from optimist.graphs import named_graph
from optimist.invariants import default_registry
from optimist.table import KnowledgeTable

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"

CLASSICAL_THEOREMS = [
    "If G is a connected graph, then independence_number <= order - minimum_degree",
    "If G is a connected graph, then independence_number <= order - matching_number",
    "If G is a connected and bipartite graph, then independence_number = order - matching_number",
    "If G is a connected and bipartite graph, then independence_number >= maximum_degree",
    "If G is a connected and regular graph, then independence_number <= matching_number",
    "If G is a connected and bipartite graph, then independence_number >= 1/2 * order",
]

CONJECTURE_ONE = (
    "If G is a connected graph, then independence_number = order - minimum_degree"
)


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture
def case_study_graphs():
    return [
        named_graph("complete", 2),
        named_graph("complete", 3),
        named_graph("path", 3),
    ]


@pytest.fixture
def case_study_table(case_study_graphs, registry):
    return KnowledgeTable.build(case_study_graphs, registry)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
