"""Conjecture value objects: hypothesis, linear conclusion, touch bookkeeping.

A conjecture reads "If G is <hypothesis>, then <target> <relation>
<affine expression>".  All comparisons are exact rational comparisons; there
is no tolerance anywhere because the knowledge table is exact by
construction.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .table import KnowledgeTable, UnknownColumnError

__all__ = [
    "Hypothesis",
    "LinearConclusion",
    "Conjecture",
    "holds_on",
    "recompute_touch",
    "render",
    "conjecture_id",
    "conjecture_to_json",
    "conjecture_from_json",
]

RELATIONS = ("<=", ">=", "=")


@dataclass(frozen=True)
class Hypothesis:
    """A boolean table column restricting which graphs a conjecture addresses.

    ``true_objects`` is the set of graph names satisfying the property when
    the conjecture was built; its size is the hypothesis's generality.
    """

    property_name: str
    display_text: str
    true_objects: frozenset[str]

    @property
    def generality(self) -> int:
        return len(self.true_objects)


@dataclass(frozen=True)
class LinearConclusion:
    """``target <relation> sum(weights * features) + intercept``.

    Zero-weight terms are dropped at construction so that structurally equal
    statements arising from different feature pairs compare (and render)
    identically.
    """

    target: str
    relation: str
    weights: tuple[Fraction, ...]
    features: tuple[str, ...]
    intercept: Fraction

    def __post_init__(self) -> None:
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.relation!r}")
        if len(self.weights) != len(self.features):
            raise ValueError("weights and features must align")
        kept = [
            (Fraction(w), f)
            for w, f in zip(self.weights, self.features)
            if Fraction(w) != 0
        ]
        object.__setattr__(self, "weights", tuple(w for w, _ in kept))
        object.__setattr__(self, "features", tuple(f for _, f in kept))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def evaluate(self, row_values: dict) -> Fraction:
        total = self.intercept
        for w, feature in zip(self.weights, self.features):
            if feature not in row_values:
                raise UnknownColumnError(feature)
            total += w * Fraction(row_values[feature])
        return total

    def satisfied_by(self, row_values: dict) -> bool:
        lhs = Fraction(row_values[self.target])
        rhs = self.evaluate(row_values)
        if self.relation == "<=":
            return lhs <= rhs
        if self.relation == ">=":
            return lhs >= rhs
        return lhs == rhs

    def expression_text(self) -> str:
        if not self.weights:
            return str(self.intercept)
        parts: list[str] = []
        for w, feature in zip(self.weights, self.features):
            magnitude = abs(w)
            term = feature if magnitude == 1 else f"{magnitude} * {feature}"
            if not parts:
                parts.append(term if w > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if w > 0 else f"- {term}")
        if self.intercept > 0:
            parts.append(f"+ {self.intercept}")
        elif self.intercept < 0:
            parts.append(f"- {-self.intercept}")
        return " ".join(parts)


@dataclass(frozen=True)
class Conjecture:
    """Hypothesis plus conclusion plus equality bookkeeping.

    ``touch`` counts hypothesis-true graphs attaining the conclusion with
    equality; ``sharps`` names them.  Identity for deduplication and
    known-theorem matching is the (hypothesis property, conclusion) pair;
    touch and sharps drift as the knowledge table grows.
    """

    hypothesis: Hypothesis
    conclusion: LinearConclusion
    touch: int
    sharps: frozenset[str]

    def is_equality(self) -> bool:
        return self.conclusion.relation == "="

    def identity(self) -> tuple:
        return (
            self.hypothesis.property_name,
            self.conclusion.target,
            self.conclusion.relation,
            self.conclusion.weights,
            self.conclusion.features,
            self.conclusion.intercept,
        )

    def __str__(self) -> str:
        return render(self)


def render(conjecture: Conjecture) -> str:
    """The exact textual form, e.g.

    ``If G is a connected graph, then independence_number <= order - minimum_degree``
    """
    conclusion = conjecture.conclusion
    return (
        f"If G is {conjecture.hypothesis.display_text}, then "
        f"{conclusion.target} {conclusion.relation} {conclusion.expression_text()}"
    )


def holds_on(
    conjecture: Conjecture, table: KnowledgeTable
) -> tuple[bool, frozenset[str]]:
    """Check validity on a table; returns (valid, counterexample names).

    Counterexamples are hypothesis-true rows violating the relation under
    exact rational comparison.
    """
    rows, _ = table.filter_by_property(conjecture.hypothesis.property_name)
    bad = [
        name for name, values in rows if not conjecture.conclusion.satisfied_by(values)
    ]
    return (not bad, frozenset(bad))


def recompute_touch(conjecture: Conjecture, table: KnowledgeTable) -> Conjecture:
    """Refresh touch, sharps, and hypothesis support against the current table."""
    valid, bad = holds_on(conjecture, table)
    if not valid:
        raise ValueError(
            f"cannot recompute touch of a falsified conjecture; "
            f"counterexamples: {sorted(bad)}"
        )
    rows, names = table.filter_by_property(conjecture.hypothesis.property_name)
    sharps = frozenset(
        name
        for name, values in rows
        if Fraction(values[conjecture.conclusion.target])
        == conjecture.conclusion.evaluate(values)
    )
    hypothesis = Hypothesis(
        conjecture.hypothesis.property_name,
        conjecture.hypothesis.display_text,
        frozenset(names),
    )
    return Conjecture(hypothesis, conjecture.conclusion, len(sharps), sharps)


def conjecture_id(conjecture: Conjecture) -> str:
    """Stable content-hash identifier of (hypothesis, conclusion)."""
    conclusion = conjecture.conclusion
    payload = "|".join(
        [
            conjecture.hypothesis.property_name,
            conclusion.target,
            conclusion.relation,
            ",".join(str(w) for w in conclusion.weights),
            ",".join(conclusion.features),
            str(conclusion.intercept),
        ]
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:12]


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def conjecture_to_json(conjecture: Conjecture) -> dict:
    conclusion = conjecture.conclusion
    return {
        "hypothesis": conjecture.hypothesis.property_name,
        "hypothesis_display": conjecture.hypothesis.display_text,
        "true_objects": sorted(conjecture.hypothesis.true_objects),
        "target": conclusion.target,
        "relation": conclusion.relation,
        "terms": [
            {"coef": str(w), "feature": f}
            for w, f in zip(conclusion.weights, conclusion.features)
        ],
        "intercept": str(conclusion.intercept),
        "touch": conjecture.touch,
        "sharps": sorted(conjecture.sharps),
    }


def conjecture_from_json(payload: dict) -> Conjecture:
    hypothesis = Hypothesis(
        payload["hypothesis"],
        payload["hypothesis_display"],
        frozenset(payload.get("true_objects", ())),
    )
    conclusion = LinearConclusion(
        target=payload["target"],
        relation=payload["relation"],
        weights=tuple(Fraction(term["coef"]) for term in payload["terms"]),
        features=tuple(term["feature"] for term in payload["terms"]),
        intercept=Fraction(payload["intercept"]),
    )
    return Conjecture(
        hypothesis, conclusion, int(payload["touch"]), frozenset(payload["sharps"])
    )
