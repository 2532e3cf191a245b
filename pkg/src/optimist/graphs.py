"""Undirected simple graphs: construction, named families, and graph6 interchange.

Vertices are always the contiguous integers ``0..n-1``.  Graph values are
immutable after construction, so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "named_graph",
    "parse_graph6",
    "encode_graph6",
    "graph_from_json_dict",
    "graph_to_json_dict",
]

GRAPH6_MAX_ORDER = 62  # short-form graph6 only


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


@dataclass(frozen=True)
class Graph:
    """A labeled simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds each edge exactly once as a sorted pair ``(u, v)`` with
    ``u < v``; the tuple itself is sorted so equal graphs compare equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from a vertex count and an edge list.

        The input edge order is irrelevant: edges are canonicalized to sorted
        pairs and stored sorted, so permutations of the same edge list produce
        equal graphs.
        """
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        canonical: set[tuple[int, int]] = set()
        for edge in edges:
            u, v = edge
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in canonical:
                raise GraphError(f"duplicate edge {pair}")
            canonical.add(pair)
        return cls(n=n, edges=tuple(sorted(canonical)))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitmasks, one per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def __repr__(self) -> str:  # keeps test output readable
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def named_graph(family: str, n: int) -> Graph:
    """Return the standard graph of a named family.

    Supported families: ``complete``, ``path``, ``cycle`` (``n >= 3``),
    ``star`` (vertex 0 is the center).
    """
    if n < 1:
        raise GraphError(f"{family} graph needs n >= 1, got {n}")
    if family == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        if n < 3:
            raise GraphError(f"cycle graph needs n >= 3, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif family == "star":
        edges = [(0, i) for i in range(1, n)]
    else:
        raise GraphError(f"unknown graph family {family!r}")
    return Graph.from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string into a Graph.

    Only the short form (one leading size byte, ``n <= 62``) is accepted;
    the multi-byte length headers (``~``) raise ``GraphError``.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(ch) for ch in s]
    if any(c < 63 or c > 126 for c in codes):
        raise GraphError(f"graph6 string {text!r} contains bytes outside 63..126")
    if codes[0] == 126:
        raise GraphError("long-form graph6 length header is not supported")
    n = codes[0] - 63
    if n < 1:
        raise GraphError("graph6 string encodes an empty vertex set")
    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = codes[1:]
    if len(body) != expected:
        raise GraphError(
            f"graph6 body for n={n} must be {expected} bytes, got {len(body)}"
        )
    bits = []
    for c in body:
        value = c - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise GraphError("graph6 padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


def encode_graph6(graph: Graph) -> str:
    """Encode a Graph as a short-form graph6 string."""
    n = graph.n
    if n > GRAPH6_MAX_ORDER:
        raise GraphError(f"short-form graph6 supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if graph.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = value << 1 | bit
        chars.append(chr(value + 63))
    return "".join(chars)


# ---------------------------------------------------------------------------
# JSON edge-list form: {"n": int, "edges": [[u, v], ...]}
# ---------------------------------------------------------------------------


def graph_from_json_dict(payload: dict) -> Graph:
    """Build a Graph from the JSON edge-list form."""
    try:
        n = payload["n"]
        edges = payload["edges"]
    except (TypeError, KeyError) as exc:
        raise GraphError(f"edge-list JSON needs 'n' and 'edges' keys: {payload!r}") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError(f"'n' must be an integer, got {n!r}")
    pairs = []
    for edge in edges:
        if not isinstance(edge, (list, tuple)) or len(edge) != 2:
            raise GraphError(f"edge {edge!r} is not a pair")
        u, v = edge
        if not isinstance(u, int) or not isinstance(v, int):
            raise GraphError(f"edge {edge!r} has non-integer endpoints")
        pairs.append((u, v))
    return Graph.from_edge_list(n, pairs)


def graph_to_json_dict(graph: Graph) -> dict:
    return {"n": graph.n, "edges": [[u, v] for u, v in graph.edges]}
