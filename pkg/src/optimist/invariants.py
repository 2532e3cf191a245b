"""Exact graph invariants, boolean properties, and the invariant registry.

Every numeric invariant here is computed exactly.  The NP-hard ones
(independence number, matching numbers) use branch-and-bound over vertex
bitmasks; a configurable ceiling (default 20 vertices) keeps worst cases
small.  Exactness matters: conjecture touch numbers are equality counts,
so a single approximate cell would poison every ranking downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graphs import Graph

__all__ = [
    "DEFAULT_CEILING",
    "CeilingExceededError",
    "InvariantRegistry",
    "default_registry",
    "hypothesis_display",
    "independence_number",
    "matching_number",
    "min_maximal_matching_number",
    "degree_stats",
    "is_connected",
    "is_bipartite",
    "is_tree",
    "is_regular",
    "boolean_properties",
]

DEFAULT_CEILING = 20


class CeilingExceededError(ValueError):
    """Raised when a graph is too large for exact brute-force computation."""


def _check_ceiling(graph: Graph, ceiling: int) -> None:
    if graph.n > ceiling:
        raise CeilingExceededError(
            f"graph has {graph.n} vertices, brute-force ceiling is {ceiling}"
        )


def independence_number(graph: Graph, ceiling: int = DEFAULT_CEILING) -> int:
    """Size of a maximum independent vertex set (exact branch and bound)."""
    _check_ceiling(graph, ceiling)
    adj = graph.adjacency
    best = 0

    def search(avail: int, size: int) -> None:
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        # pivot on the highest-degree available vertex
        pick, deg = -1, 0
        m = avail
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adj[v] & avail).bit_count()
            if d > deg:
                pick, deg = v, d
        if pick < 0:  # avail is already independent
            best = max(best, size + avail.bit_count())
            return
        search(avail & ~(adj[pick] | 1 << pick), size + 1)
        search(avail & ~(1 << pick), size)

    search((1 << graph.n) - 1, 0)
    return best


def matching_number(graph: Graph, ceiling: int = DEFAULT_CEILING) -> int:
    """Size of a maximum matching (exact branch and bound on edges)."""
    _check_ceiling(graph, ceiling)
    adj = graph.adjacency
    best = 0

    def search(free: int, size: int) -> None:
        nonlocal best
        if size + free.bit_count() // 2 <= best:
            return
        v = -1
        m = free
        while m:
            u = (m & -m).bit_length() - 1
            if adj[u] & free:
                v = u
                break
            m &= m - 1
        if v < 0:
            best = max(best, size)
            return
        partners = adj[v] & free
        while partners:
            u = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            search(free & ~(1 << v | 1 << u), size + 1)
        search(free & ~(1 << v), size)

    search((1 << graph.n) - 1, 0)
    return best


def min_maximal_matching_number(graph: Graph, ceiling: int = DEFAULT_CEILING) -> int:
    """Minimum size over all maximal (inextensible) matchings.

    A matching is maximal exactly when no edge has both endpoints unmatched,
    so the search branches on the first such edge: any maximal matching must
    contain an edge incident to one of its endpoints.  Results are memoized
    on the free-vertex mask.
    """
    _check_ceiling(graph, ceiling)
    adj = graph.adjacency
    memo: dict[int, int] = {}

    def search(free: int) -> int:
        known = memo.get(free)
        if known is not None:
            return known
        uncovered = -1
        m = free
        while m:
            u = (m & -m).bit_length() - 1
            if adj[u] & free:
                uncovered = u
                break
            m &= m - 1
        if uncovered < 0:
            memo[free] = 0
            return 0
        u = uncovered
        v = (adj[u] & free & -(adj[u] & free)).bit_length() - 1
        best = graph.n  # any maximal matching has at most n/2 edges
        candidates = []
        partners = adj[u] & free
        while partners:
            x = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            candidates.append((u, x))
        partners = adj[v] & free & ~(1 << u)
        while partners:
            y = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            candidates.append((v, y))
        for a, b in candidates:
            best = min(best, 1 + search(free & ~(1 << a | 1 << b)))
        memo[free] = best
        return best

    return search((1 << graph.n) - 1)


def degree_stats(graph: Graph) -> tuple[int, int, int]:
    """Return (order, minimum degree, maximum degree)."""
    degrees = [mask.bit_count() for mask in graph.adjacency]
    return graph.n, min(degrees), max(degrees)


def is_connected(graph: Graph) -> bool:
    adj = graph.adjacency
    seen = 1
    frontier = 1
    while frontier:
        reached = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            reached |= adj[v]
        frontier = reached & ~seen
        seen |= reached
    return seen == (1 << graph.n) - 1


def is_bipartite(graph: Graph) -> bool:
    """Two-colorability, checked per connected component."""
    adj = graph.adjacency
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            m = adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_tree(graph: Graph) -> bool:
    return is_connected(graph) and graph.edge_count == graph.n - 1


def is_regular(graph: Graph) -> bool:
    _, lo, hi = degree_stats(graph)
    return lo == hi


def boolean_properties(graph: Graph) -> dict[str, bool]:
    """Evaluate the default boolean property columns for one graph."""
    base = {
        "connected": is_connected(graph),
        "bipartite": is_bipartite(graph),
        "tree": is_tree(graph),
        "regular": is_regular(graph),
    }
    base["connected_and_bipartite"] = base["connected"] and base["bipartite"]
    base["connected_and_regular"] = base["connected"] and base["regular"]
    return base


def hypothesis_display(property_name: str) -> str:
    """Render a boolean column name the way conjectures print it.

    ``connected`` becomes "a connected graph", ``connected_and_bipartite``
    becomes "a connected and bipartite graph", and ``tree`` is special-cased
    to "a tree".
    """
    if property_name == "tree":
        return "a tree"
    words = " and ".join(property_name.split("_and_"))
    words = words.replace("_", " ")
    return f"a {words} graph"


@dataclass
class InvariantRegistry:
    """Named numeric invariants and boolean properties.

    Column order is significant: the conjecture sweep enumerates feature
    pairs in declaration order, which pins down output determinism.
    """

    numeric: dict[str, Callable[[Graph], int]] = field(default_factory=dict)
    boolean: dict[str, Callable[[Graph], bool]] = field(default_factory=dict)

    def register_numeric(self, name: str, fn: Callable[[Graph], int]) -> None:
        if name in self.numeric or name in self.boolean:
            raise ValueError(f"invariant name {name!r} already registered")
        self.numeric[name] = fn

    def register_boolean(self, name: str, fn: Callable[[Graph], bool]) -> None:
        if name in self.numeric or name in self.boolean:
            raise ValueError(f"invariant name {name!r} already registered")
        self.boolean[name] = fn

    def numeric_names(self) -> list[str]:
        return list(self.numeric)

    def boolean_names(self) -> list[str]:
        return list(self.boolean)


def default_registry(ceiling: int = DEFAULT_CEILING) -> InvariantRegistry:
    """The stock registry: six numeric invariants and six boolean properties."""
    registry = InvariantRegistry()
    registry.register_numeric("order", lambda g: degree_stats(g)[0])
    registry.register_numeric("minimum_degree", lambda g: degree_stats(g)[1])
    registry.register_numeric("maximum_degree", lambda g: degree_stats(g)[2])
    registry.register_numeric(
        "independence_number", lambda g: independence_number(g, ceiling)
    )
    registry.register_numeric("matching_number", lambda g: matching_number(g, ceiling))
    registry.register_numeric(
        "min_maximal_matching_number", lambda g: min_maximal_matching_number(g, ceiling)
    )
    for name in ("connected", "bipartite", "tree", "regular",
                 "connected_and_bipartite", "connected_and_regular"):
        registry.register_boolean(name, _property_fn(name))
    return registry


def _property_fn(name: str) -> Callable[[Graph], bool]:
    return lambda g: boolean_properties(g)[name]
