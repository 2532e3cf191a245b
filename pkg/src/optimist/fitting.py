"""Equality-maximizing linear bound fits for one (target, features, hypothesis).

Given the hypothesis-filtered rows of a knowledge table, ``solve_bound_fit``
finds affine upper and lower bounds on the target column that are valid on
every row and tight on as many rows as possible, then rationalizes the
coefficients to small denominators.  When the two bounds coincide the result
is an equality.

The underlying model is one mixed-integer program: box-bounded weights and
intercept per side, one binary equality indicator per extremal row, and big-M
constraints relaxing tightness when an indicator is off.  The big-M value is
validated to be slack at every feasible point, which lets the solver treat
the binaries combinatorially; upper and lower variables share no constraints,
so the joint model decomposes into the two sides and their optima add.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .milp import AffineSubspace, Halfspace, Hyperplane, max_tight_rows, select_point
from .table import Row, UnknownColumnError

__all__ = [
    "AffineBound",
    "BoundFitProblem",
    "BoundFitResult",
    "FitError",
    "FitInfeasibleError",
    "preprocess_extrema",
    "solve_bound_fit",
    "evaluate_bound",
    "lp_text",
]

DEFAULT_BIG_M = 1000
WEIGHT_BOX = (Fraction(-4), Fraction(4))
INTERCEPT_BOX = (Fraction(-3), Fraction(3))
RATIONALIZE_LIMITS = (10, 100)


class FitError(Exception):
    """Base class for bound-fit failures."""


class FitInfeasibleError(FitError):
    """The fit model has no feasible bound: no conjecture for this combination."""


@dataclass(frozen=True)
class AffineBound:
    """Coefficients of one fitted bound: target ~ sum(weights * features) + intercept."""

    weights: tuple[Fraction, ...]
    intercept: Fraction


@dataclass(frozen=True)
class BoundFitProblem:
    """One fit instance over a hypothesis-filtered view of the knowledge table."""

    target: str
    features: tuple[str, ...]
    hypothesis: str
    rows: tuple[Row, ...]
    big_M: int = DEFAULT_BIG_M
    weight_box: tuple[Fraction, Fraction] = WEIGHT_BOX
    intercept_box: tuple[Fraction, Fraction] = INTERCEPT_BOX

    def __post_init__(self) -> None:
        if self.target in self.features:
            raise ValueError(f"target {self.target!r} cannot be a feature")
        if len(set(self.features)) != len(self.features):
            raise ValueError(f"features must be pairwise distinct: {self.features}")
        if not self.rows:
            raise ValueError("bound fit needs at least one hypothesis-true row")
        # Big-M must strictly dominate any attainable violation so that the
        # indicator-off constraints can never bind.
        worst = max(self._gap_ceiling(values) for _, values in self.rows)
        if self.big_M <= worst:
            raise ValueError(
                f"big_M={self.big_M} is not safely above the worst possible "
                f"bound gap {worst}; raise it for this corpus"
            )

    def _gap_ceiling(self, values: dict) -> Fraction:
        w_mag = max(abs(self.weight_box[0]), abs(self.weight_box[1]))
        b_mag = max(abs(self.intercept_box[0]), abs(self.intercept_box[1]))
        total = b_mag + abs(Fraction(values[self.target]))
        for feature in self.features:
            total += w_mag * abs(Fraction(values[feature]))
        return total


@dataclass(frozen=True)
class BoundFitResult:
    """Rationalized output of one fit, with tightness bookkeeping.

    ``touch_*`` counts hypothesis-true rows where the corresponding bound
    holds with equality; ``sharps_*`` names those rows.  For an equality
    result both touch counts equal the number of hypothesis-true rows.
    """

    upper: Optional[AffineBound]
    lower: Optional[AffineBound]
    is_equality: bool
    touch_upper: int
    touch_lower: int
    sharps_upper: frozenset[str]
    sharps_lower: frozenset[str]
    diagnostics: tuple[str, ...] = field(default=())


def preprocess_extrema(
    rows: Sequence[Row], target: str, features: Sequence[str]
) -> tuple[list[Row], list[Row]]:
    """Keep one extremal row per distinct feature tuple.

    The upper fit only needs, for each feature tuple, the row with maximal
    target value (ties keep the first in table order); the lower fit keeps
    the minimal one.  Row order is preserved.
    """
    best_upper: dict[tuple, int] = {}
    best_lower: dict[tuple, int] = {}
    for index, (_, values) in enumerate(rows):
        key = tuple(values[f] for f in features)
        y = values[target]
        current = best_upper.get(key)
        if current is None or y > rows[current][1][target]:
            best_upper[key] = index
        current = best_lower.get(key)
        if current is None or y < rows[current][1][target]:
            best_lower[key] = index
    upper = [rows[i] for i in sorted(best_upper.values())]
    lower = [rows[i] for i in sorted(best_lower.values())]
    return upper, lower


def evaluate_bound(
    weights: Sequence[Fraction],
    intercept: Fraction,
    features: Sequence[str],
    row_values: dict,
) -> Fraction:
    """Exact value of ``sum(w_j * feature_j) + intercept`` on one row."""
    total = Fraction(intercept)
    for w, feature in zip(weights, features):
        if feature not in row_values:
            raise UnknownColumnError(feature)
        total += Fraction(w) * Fraction(row_values[feature])
    return total


# ---------------------------------------------------------------------------
# model construction and solving
# ---------------------------------------------------------------------------


def _side_model(
    problem: BoundFitProblem, side_rows: Sequence[Row], sense: str
) -> tuple[list[Hyperplane], list[Halfspace]]:
    """Tight-candidate hyperplanes and the feasible coefficient region.

    Coefficient vectors are ``(w_1, ..., w_k, b)``.  The region holds the
    side's bound inequality and the auxiliary constraint ``w . x >= b`` for
    every extremal row, plus the coefficient boxes.  Tightness of a row is
    membership in its bound hyperplane regardless of sense.
    """
    k = len(problem.features)
    dim = k + 1
    hyperplanes: list[Hyperplane] = []
    region: list[Halfspace] = []
    for _, values in side_rows:
        x = [Fraction(values[f]) for f in problem.features]
        y = Fraction(values[problem.target])
        main = (*x, Fraction(1))
        hyperplanes.append((main, y))
        if sense == "upper":
            region.append((main, y))  # w.x + b >= y
        else:
            region.append((tuple(-v for v in main), -y))  # w.x + b <= y
        region.append(((*x, Fraction(-1)), Fraction(0)))  # w.x >= b
    lo_w, hi_w = problem.weight_box
    for j in range(k):
        unit = [Fraction(0)] * dim
        unit[j] = Fraction(1)
        region.append((tuple(unit), lo_w))
        region.append((tuple(-v for v in unit), -hi_w))
    unit = [Fraction(0)] * dim
    unit[-1] = Fraction(1)
    lo_b, hi_b = problem.intercept_box
    region.append((tuple(unit), lo_b))
    region.append((tuple(-v for v in unit), -hi_b))
    return hyperplanes, region


def _solve_side(
    problem: BoundFitProblem, side_rows: Sequence[Row], sense: str
) -> tuple[Fraction, ...]:
    hyperplanes, region = _side_model(problem, side_rows, sense)
    solved = max_tight_rows(hyperplanes, region, len(problem.features) + 1)
    if solved is None:
        raise FitInfeasibleError(
            f"no feasible {sense} bound for target {problem.target!r} over "
            f"features {problem.features} under {problem.hypothesis!r}"
        )
    _, _, subspace = solved
    return select_point(subspace, region, len(problem.features) + 1)


def _is_sound(
    bound: AffineBound, rows: Sequence[Row], target: str,
    features: Sequence[str], sense: str,
) -> bool:
    for _, values in rows:
        rhs = evaluate_bound(bound.weights, bound.intercept, features, values)
        y = Fraction(values[target])
        if sense == "upper" and y > rhs:
            return False
        if sense == "lower" and y < rhs:
            return False
    return True


def _rationalize_side(
    exact: Sequence[Fraction],
    problem: BoundFitProblem,
    sense: str,
) -> tuple[Optional[AffineBound], Optional[str]]:
    """Snap coefficients to small denominators, keeping the bound valid.

    Tries denominators up to 10 first, then up to 100; if both perturb the
    bound into violating some row, the bound is dropped with a diagnostic
    (a silently false conjecture would be worse than a missing one).
    """
    for limit in RATIONALIZE_LIMITS:
        bound = AffineBound(
            tuple(x.limit_denominator(limit) for x in exact[:-1]),
            exact[-1].limit_denominator(limit),
        )
        if _is_sound(bound, problem.rows, problem.target, problem.features, sense):
            return bound, None
    return None, (
        f"dropped {sense} bound for {problem.target!r} over {problem.features} "
        f"under {problem.hypothesis!r}: rationalization broke soundness"
    )


def _tight_names(
    bound: AffineBound, problem: BoundFitProblem
) -> list[str]:
    names = []
    for name, values in problem.rows:
        rhs = evaluate_bound(bound.weights, bound.intercept, problem.features, values)
        if Fraction(values[problem.target]) == rhs:
            names.append(name)
    return names


def solve_bound_fit(problem: BoundFitProblem) -> BoundFitResult:
    """Solve the equality-maximizing fit for both bound directions.

    Raises ``FitInfeasibleError`` when no valid bound exists (or survives
    rationalization) in either direction, which callers treat as "no
    conjecture for this combination".
    """
    upper_rows, lower_rows = preprocess_extrema(
        problem.rows, problem.target, problem.features
    )
    exact_upper = _solve_side(problem, upper_rows, "upper")
    exact_lower = _solve_side(problem, lower_rows, "lower")

    diagnostics: list[str] = []
    upper, note = _rationalize_side(exact_upper, problem, "upper")
    if note:
        diagnostics.append(note)
    lower, note = _rationalize_side(exact_lower, problem, "lower")
    if note:
        diagnostics.append(note)
    if upper is None and lower is None:
        raise FitInfeasibleError("; ".join(diagnostics))

    all_names = [name for name, _ in problem.rows]
    if upper is not None and lower is not None and upper == lower:
        sharps = frozenset(all_names)
        return BoundFitResult(
            upper=upper,
            lower=lower,
            is_equality=True,
            touch_upper=len(all_names),
            touch_lower=len(all_names),
            sharps_upper=sharps,
            sharps_lower=sharps,
            diagnostics=tuple(diagnostics),
        )

    sharps_upper = _tight_names(upper, problem) if upper else []
    sharps_lower = _tight_names(lower, problem) if lower else []
    return BoundFitResult(
        upper=upper,
        lower=lower,
        is_equality=False,
        touch_upper=len(sharps_upper),
        touch_lower=len(sharps_lower),
        sharps_upper=frozenset(sharps_upper),
        sharps_lower=frozenset(sharps_lower),
        diagnostics=tuple(diagnostics),
    )


# ---------------------------------------------------------------------------
# debug dump
# ---------------------------------------------------------------------------


def lp_text(problem: BoundFitProblem) -> str:
    """Render the joint MILP in LP text format for external inspection."""
    upper_rows, lower_rows = preprocess_extrema(
        problem.rows, problem.target, problem.features
    )
    k = len(problem.features)
    lines = ["Maximize", " obj: " + " + ".join(
        [f"zu{i}" for i in range(len(upper_rows))]
        + [f"zl{i}" for i in range(len(lower_rows))]
    ), "Subject To"]

    def terms(values: dict, prefix: str) -> str:
        parts = []
        for j, feature in enumerate(problem.features):
            coeff = Fraction(values[feature])
            parts.append(f"{'+' if coeff >= 0 else '-'} {abs(coeff)} {prefix}{j}")
        return " ".join(parts)

    for i, (_, values) in enumerate(upper_rows):
        y = Fraction(values[problem.target])
        lines.append(f" up{i}: {terms(values, 'wu')} + bu >= {y}")
        lines.append(f" upaux{i}: {terms(values, 'wu')} - bu >= 0")
        lines.append(
            f" upbig{i}: {terms(values, 'wu')} + bu + {problem.big_M} zu{i} <= "
            f"{y + problem.big_M}"
        )
    for i, (_, values) in enumerate(lower_rows):
        y = Fraction(values[problem.target])
        lines.append(f" lo{i}: {terms(values, 'wl')} + bl <= {y}")
        lines.append(f" loaux{i}: {terms(values, 'wl')} - bl >= 0")
        lines.append(
            f" lobig{i}: {terms(values, 'wl')} + bl - {problem.big_M} zl{i} >= "
            f"{y - problem.big_M}"
        )
    lines.append("Bounds")
    for j in range(k):
        lines.append(f" {problem.weight_box[0]} <= wu{j} <= {problem.weight_box[1]}")
        lines.append(f" {problem.weight_box[0]} <= wl{j} <= {problem.weight_box[1]}")
    lines.append(f" {problem.intercept_box[0]} <= bu <= {problem.intercept_box[1]}")
    lines.append(f" {problem.intercept_box[0]} <= bl <= {problem.intercept_box[1]}")
    lines.append("Binary")
    lines.append(
        " " + " ".join(
            [f"zu{i}" for i in range(len(upper_rows))]
            + [f"zl{i}" for i in range(len(lower_rows))]
        )
    )
    lines.append("End")
    return "\n".join(lines) + "\n"
