"""Automated conjecturing on graph invariants.

The package builds an exact knowledge table of graph invariants, fits
equality-maximizing linear bounds on a target invariant with an exact
rational branch-and-bound solver, filters the candidates through a stack of
heuristics, and refines the surviving pool through a counterexample and
known-theorem feedback loop exposed over HTTP and a CLI.
"""

from .agent import AgentConfig, Optimist
from .conjectures import Conjecture, Hypothesis, LinearConclusion, render
from .fitting import BoundFitProblem, BoundFitResult, solve_bound_fit
from .graphs import Graph, named_graph, parse_graph6, encode_graph6
from .invariants import InvariantRegistry, default_registry
from .table import KnowledgeTable

__all__ = [
    "AgentConfig",
    "Optimist",
    "Conjecture",
    "Hypothesis",
    "LinearConclusion",
    "render",
    "BoundFitProblem",
    "BoundFitResult",
    "solve_bound_fit",
    "Graph",
    "named_graph",
    "parse_graph6",
    "encode_graph6",
    "InvariantRegistry",
    "default_registry",
    "KnowledgeTable",
]
