from __future__ import annotations

import pytest

from optimist.graphs import Graph, named_graph
from optimist.invariants import (
    CeilingExceededError,
    boolean_properties,
    degree_stats,
    default_registry,
    hypothesis_display,
    independence_number,
    matching_number,
    min_maximal_matching_number,
)

from .oracles import (
    atlas_connected,
    connected_bipartite_graphs,
    naive_independence_number,
    naive_matching_number,
    naive_min_maximal_matching_number,
)


class TestIndependenceNumber:
    def test_k3(self):
        assert independence_number(named_graph("complete", 3)) == 1

    def test_p3(self):
        assert independence_number(named_graph("path", 3)) == 2

    def test_p6(self):
        p6 = named_graph("path", 6)
        assert independence_number(p6) == naive_independence_number(p6) == 3

    def test_ceiling(self):
        with pytest.raises(CeilingExceededError):
            independence_number(named_graph("path", 21))

    def test_larger_sparse_graphs_stay_fast(self):
        assert independence_number(named_graph("cycle", 20)) == 10
        assert independence_number(named_graph("star", 20)) == 19
        assert independence_number(named_graph("complete", 20)) == 1


class TestMatchingNumber:
    def test_k2(self):
        assert matching_number(named_graph("complete", 2)) == 1

    def test_p3(self):
        assert matching_number(named_graph("path", 3)) == 1

    def test_p6(self):
        p6 = named_graph("path", 6)
        assert matching_number(p6) == naive_matching_number(p6) == 3

    def test_k20(self):
        assert matching_number(named_graph("complete", 20)) == 10


class TestMinMaximalMatching:
    def test_k2(self):
        assert min_maximal_matching_number(named_graph("complete", 2)) == 1

    def test_p4_middle_edge(self):
        p4 = named_graph("path", 4)
        assert naive_min_maximal_matching_number(p4) == 1
        assert min_maximal_matching_number(p4) == 1

    def test_k3(self):
        assert min_maximal_matching_number(named_graph("complete", 3)) == 1

    def test_sparse_20(self):
        assert min_maximal_matching_number(named_graph("star", 20)) == 1
        assert min_maximal_matching_number(named_graph("path", 20)) == 7


class TestDegreeStats:
    def test_p3(self):
        assert degree_stats(named_graph("path", 3)) == (3, 1, 2)

    def test_k3(self):
        assert degree_stats(named_graph("complete", 3)) == (3, 2, 2)

    def test_single_vertex(self):
        assert degree_stats(Graph.from_edge_list(1, [])) == (1, 0, 0)


class TestBooleanProperties:
    def test_p3(self):
        props = boolean_properties(named_graph("path", 3))
        assert props["connected"] and props["bipartite"] and props["tree"]
        assert not props["regular"]
        assert props["connected_and_bipartite"] and not props["connected_and_regular"]

    def test_k3(self):
        props = boolean_properties(named_graph("complete", 3))
        assert props["connected"] and not props["bipartite"] and not props["tree"]
        assert props["regular"] and props["connected_and_regular"]

    def test_c4(self):
        props = boolean_properties(named_graph("cycle", 4))
        assert props["connected"] and props["bipartite"] and props["regular"]
        assert not props["tree"]

    def test_disconnected_bipartite(self):
        two_edges = Graph.from_edge_list(4, [(0, 1), (2, 3)])
        props = boolean_properties(two_edges)
        assert not props["connected"] and props["bipartite"] and not props["tree"]


class TestOracleAgreement:
    """Cross-checks against the naive enumerators on small exhaustive corpora.

    The full n <= 7 sweep is the acceptance suite's job; this keeps a faster
    n <= 6 version in the regular tests.
    """

    def test_invariants_match_naive_n6(self):
        for graph in atlas_connected(max_n=6):
            assert independence_number(graph) == naive_independence_number(graph)
            assert matching_number(graph) == naive_matching_number(graph)
            assert min_maximal_matching_number(graph) == naive_min_maximal_matching_number(graph)

    def test_structural_inequalities_n6(self):
        for graph in atlas_connected(max_n=6):
            alpha = independence_number(graph)
            mu = matching_number(graph)
            assert matching_number(graph) >= min_maximal_matching_number(graph)
            assert 1 <= alpha <= graph.n
            assert 0 <= mu <= graph.n // 2
            props = boolean_properties(graph)
            if props["tree"]:
                assert props["bipartite"]

    def test_konig_on_connected_bipartite_n6(self):
        for graph in connected_bipartite_graphs(6):
            assert independence_number(graph) == graph.n - matching_number(graph)


class TestRegistry:
    def test_default_columns_and_order(self, registry):
        assert registry.numeric_names() == [
            "order",
            "minimum_degree",
            "maximum_degree",
            "independence_number",
            "matching_number",
            "min_maximal_matching_number",
        ]
        assert registry.boolean_names() == [
            "connected",
            "bipartite",
            "tree",
            "regular",
            "connected_and_bipartite",
            "connected_and_regular",
        ]

    def test_names_are_unique_across_kinds(self):
        registry = default_registry()
        with pytest.raises(ValueError):
            registry.register_boolean("order", lambda g: True)
        with pytest.raises(ValueError):
            registry.register_numeric("connected", lambda g: 1)

    def test_extension_is_discovered(self):
        registry = default_registry()
        registry.register_numeric("edge_count", lambda g: g.edge_count)
        assert "edge_count" in registry.numeric_names()


class TestHypothesisDisplay:
    @pytest.mark.parametrize(
        ("name", "text"),
        [
            ("connected", "a connected graph"),
            ("bipartite", "a bipartite graph"),
            ("tree", "a tree"),
            ("regular", "a regular graph"),
            ("connected_and_bipartite", "a connected and bipartite graph"),
            ("connected_and_regular", "a connected and regular graph"),
        ],
    )
    def test_display(self, name, text):
        assert hypothesis_display(name) == text
