"""Derive the case-study replay fixture.

Simulates the interactive feedback loop: start from {K2, K3, P3}, repeatedly
brute-force search small connected graphs (atlas, n <= 7) for a counterexample
to some pooled conjecture, feed the first hit back to the agent, and mark the
six classical independence-number statements as known theorems once they are
pooled and no pooled conjecture is falsifiable.  Writes the resulting event
script as JSON lines.

Run from the repository root:

    python tools/derive_fixture.py [--out fixtures/case_study_replay.jsonl]
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from optimist.agent import Optimist
from optimist.conjectures import Conjecture, render
from optimist.graphs import Graph, encode_graph6, named_graph
from optimist.invariants import default_registry

TARGET = "independence_number"

CLASSICAL_STATEMENTS = [
    "If G is a connected graph, then independence_number <= order - minimum_degree",
    "If G is a connected graph, then independence_number <= order - matching_number",
    "If G is a connected and bipartite graph, then independence_number = order - matching_number",
    "If G is a connected and bipartite graph, then independence_number >= maximum_degree",
    "If G is a connected and regular graph, then independence_number <= matching_number",
    "If G is a connected and bipartite graph, then independence_number >= 1/2 * order",
]


def atlas_corpus() -> list[Graph]:
    """Connected graphs with 2 <= n <= 7, in atlas order.

    The single-vertex graph is excluded on purpose: it is 0-regular, so it
    vacuously breaks the classical regular-graph statements the case study is
    meant to rediscover, and no interactive user would offer it.
    """
    corpus = []
    for g in graph_atlas_g():
        if g.number_of_nodes() < 2 or not nx.is_connected(g):
            continue
        mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
        edges = [(mapping[u], mapping[v]) for u, v in g.edges()]
        corpus.append(Graph.from_edge_list(g.number_of_nodes(), edges))
    return corpus


def graph_row(graph: Graph, registry) -> dict:
    row: dict = {}
    for name, fn in registry.numeric.items():
        row[name] = Fraction(fn(graph))
    for name, fn in registry.boolean.items():
        row[name] = bool(fn(graph))
    return row


def is_counterexample(conjecture: Conjecture, row: dict) -> bool:
    if not row[conjecture.hypothesis.property_name]:
        return False
    return not conjecture.conclusion.satisfied_by(row)


def find_counterexample(pool: list[Conjecture], rows: list[tuple[Graph, dict]]):
    """Pick the graph that falsifies the most pooled conjectures.

    Ties keep the earliest corpus graph (smallest order first), which makes
    the derivation deterministic.
    """
    best = None
    best_hits: list[Conjecture] = []
    for graph, row in rows:
        hits = [c for c in pool if is_counterexample(c, row)]
        if len(hits) > len(best_hits):
            best, best_hits = graph, hits
    if best is None:
        return None
    return best_hits[0], best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="fixtures/case_study_replay.jsonl")
    parser.add_argument("--max-counterexamples", type=int, default=9)
    args = parser.parse_args()

    registry = default_registry()
    corpus = atlas_corpus()
    rows = [(g, graph_row(g, registry)) for g in corpus]
    print(f"search corpus: {len(rows)} connected graphs with n <= 7")

    initial = [named_graph("complete", 2), named_graph("complete", 3), named_graph("path", 3)]
    agent = Optimist(initial)
    events: list[dict] = [
        {"event": "add-graph", "graph6": encode_graph6(g)} for g in initial
    ]
    events.append({"event": "conjecture", "target": TARGET})
    agent.conjecture(TARGET)

    added = 0
    learned: list[str] = []
    while True:
        pool = agent.upper_pools[TARGET] + agent.lower_pools[TARGET]
        texts = {render(c) for c in pool}
        pending = [s for s in CLASSICAL_STATEMENTS if s not in learned]
        if not pending:
            break
        # Mark any recognized classical statement first: learning is free.
        marked = False
        for statement in pending:
            if statement in texts:
                match = next(c for c in pool if render(c) == statement)
                print(f"learning: {statement}")
                events.append({"event": "learn-theorem", "target": TARGET, "text": statement})
                agent.learn_theorems([match])
                learned.append(statement)
                marked = True
                break
        if marked:
            continue
        hit = find_counterexample(pool, rows)
        if hit is None:
            print("stuck: nothing falsifiable and these statements are not pooled:")
            for statement in pending:
                print("   ", statement)
            print("current pool:")
            for c in pool:
                print("   ", render(c), "| touch", c.touch)
            return 1
        conjecture, graph = hit
        if added >= args.max_counterexamples:
            print("counterexample budget exhausted; still falsifiable:")
            print("   ", render(conjecture))
            return 1
        added += 1
        print(f"[{added}] {encode_graph6(graph)} (n={graph.n}) falsifies: {render(conjecture)}")
        events.append({"event": "add-graph", "graph6": encode_graph6(graph)})
        agent.add_counterexample(graph)

    events.append({"event": "conjecture", "target": TARGET})
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("".join(json.dumps(e) + "\n" for e in events))
    print(f"\nwrote {len(events)} events to {out}")
    print(f"counterexamples used: {added} (budget {args.max_counterexamples})")
    for index, statement in enumerate(learned):
        print(f"Theorem {index}. {statement}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
