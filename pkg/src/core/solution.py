"""Solution sets and Pareto dominance relations."""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.core.errors import DimensionMismatchError, EmptySetError


class Direction(str, Enum):
    """Optimization direction of an objective."""
    MINIMIZE = 'minimize'
    MAXIMIZE = 'maximize'


class DominanceOutcome(str, Enum):
    """Result of comparing two objective vectors."""
    FIRST_DOMINATES = 'first_dominates'
    SECOND_DOMINATES = 'second_dominates'
    INCOMPARABLE = 'incomparable'
    EQUAL = 'equal'


class SetRelation(str, Enum):
    """Result of the better relation between two solution sets."""
    FIRST_BETTER = 'first_better'
    SECOND_BETTER = 'second_better'
    INCOMPARABLE = 'incomparable'
    EQUIVALENT = 'equivalent'


@dataclass(frozen=True)
class ObjectiveMeta:
    """
    Describes one objective of the problem.

    Attributes:
        name: Objective name, matching the CSV header.
        direction: Whether the objective is minimized or maximized.
        units: Optional unit label used in reports.
        hard_bounds: Optional (lower, upper) problem boundary in natural units.
    """
    name: str
    direction: Direction = Direction.MINIMIZE
    units: Optional[str] = None
    hard_bounds: Optional[Tuple[float, float]] = None

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("Objective name must not be empty")
        object.__setattr__(self, 'direction', Direction(self.direction))
        if self.hard_bounds is not None:
            lower, upper = (float(v) for v in self.hard_bounds)
            if not lower < upper:
                raise ValueError(
                    f"Objective '{self.name}': hard bounds require lower < upper, got ({lower}, {upper})"
                )
            object.__setattr__(self, 'hard_bounds', (lower, upper))

    @property
    def sign(self) -> float:
        """Factor mapping natural values to minimization orientation."""
        return -1.0 if self.direction is Direction.MAXIMIZE else 1.0


@dataclass(frozen=True)
class Solution:
    """
    One objective vector.

    Attributes:
        objectives: Finite objective values, one per objective.
        id: Optional opaque identifier.
        source: Name of the set the solution came from, kept by reference-set construction.
    """
    objectives: Tuple[float, ...]
    id: Optional[str] = None
    source: Optional[str] = None

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.objectives)
        if not values:
            raise ValueError("A solution needs at least one objective")
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f"Objective values must be finite, got {values}")
        object.__setattr__(self, 'objectives', values)

    @property
    def m(self) -> int:
        return len(self.objectives)


@dataclass(frozen=True)
class SolutionSet:
    """
    A named collection of solutions sharing objective metadata.

    Attributes:
        name: Set name, usually the producing algorithm or run.
        meta: Objective metadata, one entry per objective.
        solutions: Member solutions in input order.
        negated: Indices of objectives negated by the minimization conversion.
    """
    name: str
    meta: Tuple[ObjectiveMeta, ...]
    solutions: Tuple[Solution, ...] = ()
    negated: Tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("Solution set name must not be empty")
        object.__setattr__(self, 'meta', tuple(self.meta))
        object.__setattr__(self, 'solutions', tuple(self.solutions))
        object.__setattr__(self, 'negated', tuple(sorted(self.negated)))
        for solution in self.solutions:
            if solution.m != self.m:
                raise DimensionMismatchError(
                    f"Set '{self.name}' has {self.m} objectives but a solution has {solution.m}"
                )

    @property
    def m(self) -> int:
        return len(self.meta)

    @property
    def names(self) -> List[str]:
        return [meta.name for meta in self.meta]

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[Solution]:
        return iter(self.solutions)

    def as_array(self) -> np.ndarray:
        """Return the objective values as an (n, m) float array."""
        if not self.solutions:
            return np.empty((0, self.m), dtype=float)
        return np.array([s.objectives for s in self.solutions], dtype=float)

    def with_solutions(self, solutions: Sequence[Solution], name: Optional[str] = None) -> 'SolutionSet':
        """Copy of this set with other members and the same metadata."""
        return replace(self, solutions=tuple(solutions), name=name or self.name)

    @classmethod
    def from_points(
        cls,
        name: str,
        points: Sequence[Sequence[float]],
        names: Optional[Sequence[str]] = None,
        directions: Optional[Sequence[Direction]] = None,
    ) -> 'SolutionSet':
        """
        Build a set from raw objective vectors.

        Args:
            name: Set name.
            points: Objective vectors.
            names: Objective names, defaults to f1..fm.
            directions: Objective directions, defaults to all minimize.

        Returns:
            SolutionSet: The new set.
        """
        rows = [tuple(p) for p in points]
        if names is None:
            m = len(rows[0]) if rows else len(directions or ()) or 2
            names = [f"f{i + 1}" for i in range(m)]
        directions = directions or [Direction.MINIMIZE] * len(names)
        meta = tuple(ObjectiveMeta(n, d) for n, d in zip(names, directions))
        return cls(name, meta, tuple(Solution(r) for r in rows))


VectorLike = Union[Solution, Sequence[float], np.ndarray]


def _vector(value: VectorLike) -> np.ndarray:
    if isinstance(value, Solution):
        return np.asarray(value.objectives, dtype=float)
    return np.asarray(value, dtype=float)


def _pair(a: VectorLike, b: VectorLike) -> Tuple[np.ndarray, np.ndarray]:
    va, vb = _vector(a), _vector(b)
    if va.shape != vb.shape:
        raise DimensionMismatchError(f"Cannot compare vectors of length {va.size} and {vb.size}")
    return va, vb


def weakly_dominates(a: VectorLike, b: VectorLike) -> bool:
    """True iff a is no worse than b on every objective."""
    va, vb = _pair(a, b)
    return bool(np.all(va <= vb))


def dominates(a: VectorLike, b: VectorLike) -> bool:
    """True iff a weakly dominates b and differs from it somewhere."""
    va, vb = _pair(a, b)
    return bool(np.all(va <= vb) and np.any(va < vb))


def compare(a: VectorLike, b: VectorLike) -> DominanceOutcome:
    """
    Classify the dominance relation between two vectors.

    Args:
        a: First objective vector.
        b: Second objective vector.

    Returns:
        DominanceOutcome: Exactly one of the four outcomes.
    """
    va, vb = _pair(a, b)
    if np.array_equal(va, vb):
        return DominanceOutcome.EQUAL
    if dominates(va, vb):
        return DominanceOutcome.FIRST_DOMINATES
    if dominates(vb, va):
        return DominanceOutcome.SECOND_DOMINATES
    return DominanceOutcome.INCOMPARABLE


def _check_same_m(A: SolutionSet, B: SolutionSet) -> None:
    if A.m != B.m:
        raise DimensionMismatchError(
            f"Sets '{A.name}' and '{B.name}' have {A.m} and {B.m} objectives"
        )


def dominance_matrices(X: np.ndarray, Y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pairwise dominance between the rows of two point arrays.

    Args:
        X: (n, m) array.
        Y: (k, m) array.

    Returns:
        tuple: (weak, strict) boolean (n, k) matrices, weak[i, j] meaning X[i] weakly dominates Y[j].
    """
    le = X[:, None, :] <= Y[None, :, :]
    lt = X[:, None, :] < Y[None, :, :]
    weak = le.all(axis=2)
    strict = weak & lt.any(axis=2)
    return weak, strict


def set_dominates(A: SolutionSet, B: SolutionSet) -> bool:
    """Every member of B is dominated by some member of A."""
    _check_same_m(A, B)
    if not len(B):
        raise EmptySetError(f"Set dominance is undefined for empty set '{B.name}'")
    if not len(A):
        return False
    _, strict = dominance_matrices(A.as_array(), B.as_array())
    return bool(strict.any(axis=0).all())


def set_weakly_dominates(A: SolutionSet, B: SolutionSet) -> bool:
    """Every member of B is weakly dominated by some member of A."""
    _check_same_m(A, B)
    if not len(B):
        raise EmptySetError(f"Set dominance is undefined for empty set '{B.name}'")
    if not len(A):
        return False
    weak, _ = dominance_matrices(A.as_array(), B.as_array())
    return bool(weak.any(axis=0).all())


def better_relation(A: SolutionSet, B: SolutionSet) -> SetRelation:
    """
    Better relation between two nonempty sets.

    Args:
        A: First set.
        B: Second set.

    Returns:
        SetRelation: FIRST_BETTER when A weakly set-dominates B but not the reverse,
        EQUIVALENT on mutual weak set-dominance, INCOMPARABLE otherwise.
    """
    if not len(A):
        raise EmptySetError(f"Better relation is undefined for empty set '{A.name}'")
    a_over_b = set_weakly_dominates(A, B)
    b_over_a = set_weakly_dominates(B, A)
    if a_over_b and b_over_a:
        return SetRelation.EQUIVALENT
    if a_over_b:
        return SetRelation.FIRST_BETTER
    if b_over_a:
        return SetRelation.SECOND_BETTER
    return SetRelation.INCOMPARABLE


def nondominated_mask(X: np.ndarray) -> np.ndarray:
    """Boolean mask of rows not dominated by any other row."""
    if not len(X):
        return np.zeros(0, dtype=bool)
    _, strict = dominance_matrices(X, X)
    return ~strict.any(axis=0)


def nondominated_front(A: SolutionSet) -> SolutionSet:
    """Members of A not dominated by any other member, duplicates kept, order preserved."""
    mask = nondominated_mask(A.as_array())
    return A.with_solutions([s for s, keep in zip(A.solutions, mask) if keep])


def unique_nondominated_front(A: SolutionSet) -> SolutionSet:
    """Nondominated front with duplicate vectors collapsed to their first occurrence."""
    seen = set()
    unique = []
    for solution in nondominated_front(A):
        if solution.objectives not in seen:
            seen.add(solution.objectives)
            unique.append(solution)
    return A.with_solutions(unique)


def project(A: SolutionSet, keep: Sequence[int]) -> SolutionSet:
    """
    Restrict a set to a subset of its objectives.

    Args:
        A: Set to project.
        keep: Indices of the objectives to keep, in the output order.

    Returns:
        SolutionSet: Set over the kept objectives only.
    """
    keep = list(keep)
    if not keep:
        raise ValueError("At least one objective must be kept")
    for index in keep:
        if not 0 <= index < A.m:
            raise DimensionMismatchError(f"Objective index {index} out of range for m={A.m}")
    solutions = [
        replace(s, objectives=tuple(s.objectives[i] for i in keep)) for s in A.solutions
    ]
    negated = tuple(pos for pos, i in enumerate(keep) if i in A.negated)
    return replace(
        A,
        meta=tuple(A.meta[i] for i in keep),
        solutions=tuple(solutions),
        negated=negated,
    )
