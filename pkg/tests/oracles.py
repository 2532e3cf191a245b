"""Independent naive oracles used to cross-check the production code.

Everything here enumerates without pruning so it shares no search logic with
the implementations under test: independence by full subset enumeration,
matchings by plain include/exclude recursion over the edge list, bound fits
by trying every candidate line.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Optional

import networkx as nx

from optimist.graphs import Graph


def nx_to_graph(g: "nx.Graph") -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return Graph.from_edge_list(
        g.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in g.edges()]
    )


def graph_to_nx(graph: Graph) -> "nx.Graph":
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


def atlas_connected(max_n: int = 7, min_n: int = 1) -> list[Graph]:
    """Every connected graph with min_n <= n <= max_n, one per isomorphism class."""
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        if n > 0 and nx.is_connected(g):
            out.append(nx_to_graph(g))
    return out


# ---------------------------------------------------------------------------
# invariants by plain enumeration
# ---------------------------------------------------------------------------


def naive_independence_number(graph: Graph) -> int:
    best = 0
    for mask in range(1 << graph.n):
        ok = True
        for u, v in graph.edges:
            if mask >> u & 1 and mask >> v & 1:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best


def enumerate_matchings(graph: Graph) -> Iterator[frozenset]:
    """Every matching (as a frozenset of edges), by include/exclude recursion."""
    edges = list(graph.edges)

    def rec(index: int, used: int, chosen: tuple) -> Iterator[frozenset]:
        if index == len(edges):
            yield frozenset(chosen)
            return
        u, v = edges[index]
        yield from rec(index + 1, used, chosen)
        if not (used >> u & 1) and not (used >> v & 1):
            yield from rec(index + 1, used | 1 << u | 1 << v, chosen + ((u, v),))

    yield from rec(0, 0, ())


def naive_matching_number(graph: Graph) -> int:
    return max(len(m) for m in enumerate_matchings(graph))


def _is_maximal(graph: Graph, matching: frozenset) -> bool:
    used = 0
    for u, v in matching:
        used |= 1 << u | 1 << v
    for u, v in graph.edges:
        if not (used >> u & 1) and not (used >> v & 1):
            return False
    return True


def naive_min_maximal_matching_number(graph: Graph) -> int:
    return min(
        len(m) for m in enumerate_matchings(graph) if _is_maximal(graph, m)
    )


# ---------------------------------------------------------------------------
# exhaustive connected bipartite graphs (covers every isomorphism class)
# ---------------------------------------------------------------------------


def connected_bipartite_graphs(max_n: int) -> Iterator[Graph]:
    """Yield connected bipartite graphs covering all isomorphism classes, n <= max_n.

    For each split a + b = n (a <= b), right-side vertices are described by
    their neighborhood bitmask over the left side; every bipartite graph
    appears as some multiset of masks, so enumerating the multisets covers
    every isomorphism class at least once.  Duplicates are possible and
    harmless for property checking.
    """
    yield Graph.from_edge_list(1, [])
    for n in range(2, max_n + 1):
        for a in range(1, n // 2 + 1):
            b = n - a
            for masks in combinations_with_replacement(range(1, 1 << a), b):
                edges = []
                for right, mask in enumerate(masks):
                    for left in range(a):
                        if mask >> left & 1:
                            edges.append((left, a + right))
                graph = Graph.from_edge_list(n, edges)
                if _connected(graph):
                    yield graph


def _connected(graph: Graph) -> bool:
    seen = {0}
    stack = [0]
    adj = graph.adjacency
    while stack:
        v = stack.pop()
        m = adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == graph.n


# ---------------------------------------------------------------------------
# bound-fit optimality oracle: enumerate candidate lines
# ---------------------------------------------------------------------------

WEIGHT_BOX = (Fraction(-4), Fraction(4))
INTERCEPT_BOX = (Fraction(-3), Fraction(3))


def _line_feasible(w: Fraction, b: Fraction, points, sense: str) -> bool:
    if not (WEIGHT_BOX[0] <= w <= WEIGHT_BOX[1]):
        return False
    if not (INTERCEPT_BOX[0] <= b <= INTERCEPT_BOX[1]):
        return False
    for x, y in points:
        value = w * x + b
        if sense == "upper" and value < y:
            return False
        if sense == "lower" and value > y:
            return False
        if w * x < b:  # auxiliary model constraint
            return False
    return True


def best_line_equalities(points, sense: str) -> Optional[int]:
    """Maximum tight count over candidate lines, or None if no candidate is feasible.

    Candidates: the line through every pair of points with distinct x and the
    horizontal line through every point; to also cover single-tight optima
    pinned by a box face or the auxiliary constraint, the lines through every
    single point with the weight, the intercept, or the auxiliary boundary
    pinned are added.  Any optimum is a vertex of the feasible region with at
    least one tight point, so it has a second active constraint and appears
    in this candidate set.  Coefficients are rationalized to denominators
    <= 10 before counting, mirroring the production rationalization.
    """
    candidates: list[tuple[Fraction, Fraction]] = []
    for (x1, y1), (x2, y2) in combinations(points, 2):
        if x1 == x2:
            continue
        w = Fraction(y2 - y1, x2 - x1)
        candidates.append((w, y1 - w * x1))
    for x, y in points:
        candidates.append((Fraction(0), Fraction(y)))
        for w in (WEIGHT_BOX[0], WEIGHT_BOX[1]):
            candidates.append((w, y - w * x))
        if x != 0:
            for b in (INTERCEPT_BOX[0], INTERCEPT_BOX[1]):
                candidates.append((Fraction(y - b, x), Fraction(b)))
            candidates.append((Fraction(y, 2 * x), Fraction(y, 2)))
    best = None
    for w, b in candidates:
        w = w.limit_denominator(10)
        b = b.limit_denominator(10)
        if not _line_feasible(w, b, points, sense):
            continue
        tight = sum(1 for x, y in points if w * x + b == y)
        if best is None or tight > best:
            best = tight
    return best
