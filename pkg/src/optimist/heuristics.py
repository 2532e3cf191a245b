"""The four conjecture-filtering heuristics plus the false-conjecture filter.

All of them are pure functions over conjecture lists and deterministic given
input order.  The smokey variants require their input sorted by touch number
descending, which is exactly what hazel produces.
"""

from __future__ import annotations

import logging

from .conjectures import Conjecture, holds_on
from .table import KnowledgeTable

__all__ = ["hazel", "morgan", "weak_smokey", "strong_smokey", "filter_false"]

logger = logging.getLogger(__name__)


def hazel(conjectures: list[Conjecture], min_touch: int = 0) -> list[Conjecture]:
    """Deduplicate, drop touch <= min_touch, sort by touch descending.

    Deduplication is structural (hypothesis plus conclusion) and keeps the
    first occurrence; the sort is stable, so ties stay in first-seen order.
    """
    seen = set()
    unique: list[Conjecture] = []
    for conjecture in conjectures:
        key = conjecture.identity()
        if key not in seen:
            seen.add(key)
            unique.append(conjecture)
    surviving = [c for c in unique if c.touch > min_touch]
    surviving.sort(key=lambda c: c.touch, reverse=True)
    return surviving


def morgan(conjectures: list[Conjecture]) -> list[Conjecture]:
    """Drop conjectures whose conclusion also appears under a more general hypothesis.

    Generality compares the number of graphs satisfying each hypothesis; when
    two hypotheses cover equally many graphs the pair is incomparable, both
    are kept, and the pair is logged.
    """
    survivors = conjectures.copy()
    for one in conjectures:
        for two in survivors.copy():
            if one is two:
                continue
            if one.conclusion != two.conclusion:
                continue
            if one.hypothesis.generality > two.hypothesis.generality:
                survivors.remove(two)
            elif (
                one.hypothesis.generality == two.hypothesis.generality
                and one.hypothesis.property_name != two.hypothesis.property_name
            ):
                logger.info(
                    "morgan: incomparable hypotheses %r and %r share a conclusion",
                    one.hypothesis.property_name,
                    two.hypothesis.property_name,
                )
    return survivors


def weak_smokey(conjectures: list[Conjecture]) -> list[Conjecture]:
    """Keep conjectures that are equalities, subsume a kept sharp set, or add sharps.

    Expects a non-empty list sorted by touch descending.  The first conjecture
    is always kept; afterwards an inequality survives if its sharp set is a
    superset of some already-kept conjecture's sharps, or failing that, if it
    contributes at least one sharp graph outside the running union.
    """
    if not conjectures:
        raise ValueError("weak_smokey needs a non-empty conjecture list")
    kept = [conjectures[0]]
    sharp_union = set(conjectures[0].sharps)
    for conjecture in conjectures[1:]:
        if conjecture.is_equality():
            kept.append(conjecture)
            sharp_union |= conjecture.sharps
        elif any(conjecture.sharps.issuperset(k.sharps) for k in kept):
            kept.append(conjecture)
            sharp_union |= conjecture.sharps
        elif conjecture.sharps - sharp_union:
            kept.append(conjecture)
            sharp_union |= conjecture.sharps
    return kept


def strong_smokey(conjectures: list[Conjecture]) -> list[Conjecture]:
    """Like weak_smokey but without the novelty branch.

    An inequality survives only when its sharp set is a superset of some
    already-kept conjecture's sharps (non-strict: set equality qualifies).
    """
    if not conjectures:
        raise ValueError("strong_smokey needs a non-empty conjecture list")
    kept = [conjectures[0]]
    for conjecture in conjectures[1:]:
        if conjecture.is_equality():
            kept.append(conjecture)
        elif any(conjecture.sharps.issuperset(k.sharps) for k in kept):
            kept.append(conjecture)
    return kept


def filter_false(
    conjectures: list[Conjecture], table: KnowledgeTable
) -> list[Conjecture]:
    """Retain exactly the conjectures with no counterexample in the table."""
    return [c for c in conjectures if holds_on(c, table)[0]]
