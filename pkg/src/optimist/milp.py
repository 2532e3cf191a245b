"""Exact rational branch-and-bound machinery for equality-maximizing bound fits.

The bound-fit MILPs have a special shape: a fixed polytope of feasible
coefficient vectors (box bounds, one inequality and one auxiliary constraint
per data row) plus one binary indicator per row that counts whether the row's
inequality is tight.  Because the big-M constant is chosen large enough to
never bind, maximizing the indicator sum is exactly the geometric problem
"over the feasible polytope, maximize the number of row hyperplanes passing
through the chosen point".

The solver here branches on the indicators in row order, carrying the affine
subspace spanned by the committed tight rows and pruning with the remaining
row count.  Node feasibility is decided by an exact incremental
linear-programming feasibility test (Seidel-style, exact ``Fraction``
arithmetic) in the at-most-three free dimensions.  Everything is
deterministic: fixed row order, fixed constraint order, and a total order on
candidate solution points.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

__all__ = [
    "Halfspace",
    "Hyperplane",
    "feasible_point",
    "max_tight_rows",
    "select_point",
]

# A halfspace (a, c) means a . v >= c; a hyperplane (a, c) means a . v == c.
Halfspace = tuple[tuple[Fraction, ...], Fraction]
Hyperplane = tuple[tuple[Fraction, ...], Fraction]

ZERO = Fraction(0)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    total = ZERO
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def dedup_halfspaces(constraints: list[Halfspace]) -> list[Halfspace]:
    """Drop exact duplicates after scaling by the first nonzero magnitude."""
    seen: set[Halfspace] = set()
    out: list[Halfspace] = []
    for a, c in constraints:
        scale = next((abs(x) for x in a if x), None)
        key = (a, c) if scale is None else (tuple(x / scale for x in a), c / scale)
        if key not in seen:
            seen.add(key)
            out.append((a, c))
    return out


# ---------------------------------------------------------------------------
# Exact feasibility of a halfspace system (incremental, Seidel-style)
# ---------------------------------------------------------------------------


def feasible_point(constraints: list[Halfspace], dim: int) -> Optional[list[Fraction]]:
    """Return a point satisfying every ``a . t >= c``, or None if there is none.

    Processes constraints in order, keeping a point feasible for the prefix.
    When a new constraint is violated, a feasible point (if any) exists on its
    boundary hyperplane, so the search recurses one dimension down with all
    prior constraints substituted onto that hyperplane.  Input order is part
    of the contract: it makes the returned witness deterministic.
    """
    if dim == 0:
        return [] if all(c <= 0 for _, c in constraints) else None
    point = [ZERO] * dim
    for index, (a, c) in enumerate(constraints):
        if _dot(a, point) >= c:
            continue
        pivot = next((j for j in range(dim) if a[j]), None)
        if pivot is None:
            return None  # 0 >= c with c > 0
        reduced: list[Halfspace] = []
        for a2, c2 in constraints[:index]:
            factor = a2[pivot] / a[pivot]
            new_a = tuple(
                a2[j] - factor * a[j] for j in range(dim) if j != pivot
            )
            reduced.append((new_a, c2 - factor * c))
        sub = feasible_point(reduced, dim - 1)
        if sub is None:
            return None
        lifted = list(sub[:pivot]) + [ZERO] + list(sub[pivot:])
        lifted[pivot] = (
            c - sum(a[j] * lifted[j] for j in range(dim) if j != pivot)
        ) / a[pivot]
        point = lifted
    return point


# ---------------------------------------------------------------------------
# Affine subspaces of the coefficient space
# ---------------------------------------------------------------------------


class AffineSubspace:
    """An affine subspace of Q^D as an anchor point plus basis directions."""

    __slots__ = ("point", "basis")

    def __init__(self, point: tuple[Fraction, ...], basis: tuple[tuple[Fraction, ...], ...]):
        self.point = point
        self.basis = basis

    @classmethod
    def full(cls, dim: int) -> "AffineSubspace":
        point = tuple(ZERO for _ in range(dim))
        basis = tuple(
            tuple(Fraction(1) if i == j else ZERO for j in range(dim))
            for i in range(dim)
        )
        return cls(point, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def project(self, a: Sequence[Fraction], c: Fraction) -> Halfspace:
        """Express ``a . v >= c`` in this subspace's parameter coordinates."""
        return (
            tuple(_dot(a, direction) for direction in self.basis),
            c - _dot(a, self.point),
        )

    def embed(self, t: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Map parameter coordinates back to a point of the ambient space."""
        out = list(self.point)
        for coeff, direction in zip(t, self.basis):
            if coeff:
                for j, x in enumerate(direction):
                    if x:
                        out[j] += coeff * x
        return tuple(out)

    def restrict(self, a_t: Sequence[Fraction], c_t: Fraction) -> "AffineSubspace":
        """Intersect with a hyperplane given in parameter coordinates.

        The caller must have checked that some ``a_t`` entry is nonzero.
        """
        pivot = next(j for j in range(len(a_t)) if a_t[j])
        pivot_dir = self.basis[pivot]
        scale = c_t / a_t[pivot]
        new_point = tuple(
            p + scale * d for p, d in zip(self.point, pivot_dir)
        )
        new_basis = []
        for j, direction in enumerate(self.basis):
            if j == pivot:
                continue
            factor = a_t[j] / a_t[pivot]
            new_basis.append(
                tuple(d - factor * pd for d, pd in zip(direction, pivot_dir))
            )
        return AffineSubspace(new_point, tuple(new_basis))


def _substitute(
    constraints: list[Halfspace], a_t: Sequence[Fraction], c_t: Fraction
) -> list[Halfspace]:
    """Rewrite parameter-space constraints onto the hyperplane ``a_t . t == c_t``."""
    pivot = next(j for j in range(len(a_t)) if a_t[j])
    dim = len(a_t)
    out: list[Halfspace] = []
    for a2, c2 in constraints:
        factor = a2[pivot] / a_t[pivot]
        new_a = tuple(a2[j] - factor * a_t[j] for j in range(dim) if j != pivot)
        out.append((new_a, c2 - factor * c_t))
    return out


# ---------------------------------------------------------------------------
# Branch and bound over the tight-row indicators
# ---------------------------------------------------------------------------


def max_tight_rows(
    hyperplanes: list[Hyperplane],
    region: list[Halfspace],
    dim: int,
) -> Optional[tuple[int, tuple[int, ...], AffineSubspace]]:
    """Maximize how many row hyperplanes a feasible point can satisfy at once.

    Returns ``(count, committed_row_indices, subspace)`` for the first optimum
    in depth-first order (tight branch explored first), or None when the
    region itself is infeasible.  ``subspace`` is the intersection of the
    committed hyperplanes; every feasible point in it attains the optimum.
    """
    region = dedup_halfspaces(region)
    if feasible_point(region, dim) is None:
        return None

    total = len(hyperplanes)
    best_count = -1
    best_committed: tuple[int, ...] = ()
    best_subspace = AffineSubspace.full(dim)

    def recurse(
        idx: int,
        subspace: AffineSubspace,
        region_p: list[Halfspace],
        hypers_p: list[Hyperplane],
        committed: list[int],
    ) -> None:
        # region_p and hypers_p live in the current subspace's parameters;
        # hypers_p[0] corresponds to hyperplanes[idx].
        nonlocal best_count, best_committed, best_subspace
        if len(committed) + (total - idx) <= best_count:
            return
        if idx == total:
            if len(committed) > best_count:
                best_count = len(committed)
                best_committed = tuple(committed)
                best_subspace = subspace
            return
        a_t, c_t = hypers_p[0]
        rest = hypers_p[1:]
        if not any(a_t):
            if c_t == 0:
                # row is tight everywhere on the current subspace
                committed.append(idx)
                recurse(idx + 1, subspace, region_p, rest, committed)
                committed.pop()
            else:
                recurse(idx + 1, subspace, region_p, rest, committed)
            return
        # tight branch first: commit the row, drop one dimension
        reduced_region = _substitute(region_p, a_t, c_t)
        if feasible_point(reduced_region, subspace.dim - 1) is not None:
            committed.append(idx)
            recurse(
                idx + 1,
                subspace.restrict(a_t, c_t),
                reduced_region,
                _substitute(rest, a_t, c_t),
                committed,
            )
            committed.pop()
        recurse(idx + 1, subspace, region_p, rest, committed)

    recurse(0, AffineSubspace.full(dim), list(region), list(hyperplanes), [])
    return best_count, best_committed, best_subspace


# ---------------------------------------------------------------------------
# Deterministic solution-point selection
# ---------------------------------------------------------------------------


def _solve_square(rows: list[Hyperplane], dim: int) -> Optional[list[Fraction]]:
    """Solve ``dim`` linear equations in ``dim`` unknowns; None when singular."""
    matrix = [list(a) + [c] for a, c in rows]
    for col in range(dim):
        pivot_row = next((r for r in range(col, dim) if matrix[r][col]), None)
        if pivot_row is None:
            return None
        matrix[col], matrix[pivot_row] = matrix[pivot_row], matrix[col]
        pivot = matrix[col][col]
        for r in range(dim):
            if r != col and matrix[r][col]:
                factor = matrix[r][col] / pivot
                for j in range(col, dim + 1):
                    matrix[r][j] -= factor * matrix[col][j]
    return [matrix[i][dim] / matrix[i][i] for i in range(dim)]


def select_point(
    subspace: AffineSubspace, region: list[Halfspace], dim: int
) -> tuple[Fraction, ...]:
    """Pick the solver's reported point inside ``subspace`` intersected with the region.

    The point is chosen by a total order: smallest coefficient L1 norm, then
    fewest nonzero coefficients, then lexicographically smallest vector.  The
    minimum is attained at a vertex of the feasible polytope refined by the
    coordinate hyperplanes, so those candidate points are enumerated exactly.
    """
    d = subspace.dim
    if d == 0:
        return subspace.point
    projected = dedup_halfspaces([subspace.project(a, c) for a, c in region])

    planes: list[Hyperplane] = []
    seen: set[Hyperplane] = set()

    def add_plane(a: tuple[Fraction, ...], c: Fraction) -> None:
        scale = next((x for x in a if x), None)
        if scale is None:
            return
        key = (tuple(x / scale for x in a), c / scale)
        if key not in seen:
            seen.add(key)
            planes.append((a, c))

    for a, c in projected:
        add_plane(a, c)
    for j in range(len(subspace.point)):
        add_plane(
            tuple(direction[j] for direction in subspace.basis),
            -subspace.point[j],
        )

    best_key = None
    best_point: Optional[tuple[Fraction, ...]] = None
    for combo in combinations(planes, d):
        t = _solve_square(list(combo), d)
        if t is None:
            continue
        if any(_dot(a, t) < c for a, c in projected):
            continue
        v = subspace.embed(t)
        key = (
            sum(abs(x) for x in v),
            sum(1 for x in v if x),
            v,
        )
        if best_key is None or key < best_key:
            best_key = key
            best_point = v
    if best_point is None:
        raise RuntimeError("feasible region has no vertex; coefficient boxes missing?")
    return best_point
