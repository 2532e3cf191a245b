"""Systematic conjecture generation: enumerate fits, then filter in stages.

``make_all_linear_conjectures`` sweeps every unordered pair of non-target
numeric columns against every boolean column and solves one bound fit per
combination.  ``run_pipeline`` chains the full filter sequence: false-filter,
hazel, morgan, a smokey variant, and finally removal of statements already
known as theorems.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .conjectures import Conjecture, Hypothesis, LinearConclusion
from .fitting import BoundFitProblem, FitError, solve_bound_fit
from .heuristics import filter_false, hazel, morgan, strong_smokey, weak_smokey
from .invariants import hypothesis_display
from .table import KnowledgeTable, UnknownColumnError

__all__ = ["make_all_linear_conjectures", "run_pipeline"]

logger = logging.getLogger(__name__)

SMOKEY_MODES = ("weak", "strong")


def make_all_linear_conjectures(
    table: KnowledgeTable,
    target: str,
    numeric_columns: Optional[Sequence[str]] = None,
    boolean_columns: Optional[Sequence[str]] = None,
    big_M: int = 1000,
) -> tuple[list[Conjecture], list[Conjecture]]:
    """Fit bounds for every (feature pair, boolean property) combination.

    Equality fits produce a single ``=`` conjecture in the upper list with no
    lower companion.  Combinations whose hypothesis matches no row are
    skipped silently; infeasible fits are logged and skipped without
    aborting the sweep.
    """
    if target not in table.numeric_columns:
        raise UnknownColumnError(target)
    numerics = list(numeric_columns if numeric_columns is not None else table.numeric_columns)
    booleans = list(boolean_columns if boolean_columns is not None else table.boolean_columns)
    uppers: list[Conjecture] = []
    lowers: list[Conjecture] = []
    seen_pairs: set[frozenset[str]] = set()
    for one, two in combinations(numerics, 2):
        pair = frozenset((one, two))
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        if target in (one, two):
            continue
        for prop in booleans:
            rows, names = table.filter_by_property(prop)
            if not rows:
                continue
            problem = BoundFitProblem(
                target=target,
                features=(one, two),
                hypothesis=prop,
                rows=tuple(rows),
                big_M=big_M,
            )
            try:
                result = solve_bound_fit(problem)
            except FitError as exc:
                logger.info("skipping (%s, %s | %s): %s", one, two, prop, exc)
                continue
            hypothesis = Hypothesis(prop, hypothesis_display(prop), frozenset(names))
            if result.is_equality:
                conclusion = LinearConclusion(
                    target, "=", result.upper.weights, (one, two), result.upper.intercept
                )
                uppers.append(
                    Conjecture(hypothesis, conclusion, result.touch_upper, result.sharps_upper)
                )
                continue
            if result.upper is not None:
                conclusion = LinearConclusion(
                    target, "<=", result.upper.weights, (one, two), result.upper.intercept
                )
                uppers.append(
                    Conjecture(hypothesis, conclusion, result.touch_upper, result.sharps_upper)
                )
            if result.lower is not None:
                conclusion = LinearConclusion(
                    target, ">=", result.lower.weights, (one, two), result.lower.intercept
                )
                lowers.append(
                    Conjecture(hypothesis, conclusion, result.touch_lower, result.sharps_lower)
                )
    return uppers, lowers


def run_pipeline(
    table: KnowledgeTable,
    target: str,
    known_theorems: Iterable[Conjecture] = (),
    smokey_mode: str = "weak",
    min_touch: int = 1,
    big_M: int = 1000,
) -> tuple[list[Conjecture], list[Conjecture]]:
    """Generate and filter conjectures for one target.

    Stage order: generation, false filter, hazel, morgan, smokey, then
    structural removal of known theorems.  Every surviving conjecture is
    valid on the full current table.
    """
    if smokey_mode not in SMOKEY_MODES:
        raise ValueError(f"smokey_mode must be one of {SMOKEY_MODES}, got {smokey_mode!r}")
    if not table.rows:
        raise ValueError("cannot conjecture over an empty knowledge table")
    uppers, lowers = make_all_linear_conjectures(table, target, big_M=big_M)
    logger.info(
        "initial sweep for %s produced %d upper and %d lower conjectures",
        target, len(uppers), len(lowers),
    )
    uppers = filter_false(uppers, table)
    lowers = filter_false(lowers, table)
    uppers = hazel(uppers, min_touch=min_touch)
    lowers = hazel(lowers, min_touch=min_touch)
    uppers = morgan(uppers)
    lowers = morgan(lowers)
    smokey = weak_smokey if smokey_mode == "weak" else strong_smokey
    if uppers:
        uppers = smokey(uppers)
    if lowers:
        lowers = smokey(lowers)
    known = {theorem.identity() for theorem in known_theorems}
    uppers = [c for c in uppers if c.identity() not in known]
    lowers = [c for c in lowers if c.identity() not in known]
    return uppers, lowers
