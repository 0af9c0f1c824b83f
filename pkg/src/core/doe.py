"""Descriptive objective evaluation and representative-run selection."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import WEIGHT_TOLERANCE
from src.core.errors import (
    DimensionMismatchError,
    EmptySetError,
    InconsistentPreferencesError,
    IndicatorArityError,
)
from src.core.indicators import (
    IndicatorConfig,
    ReferenceData,
    build_reference_data,
    canonical_name,
    evaluate,
    is_binary,
)
from src.core.preprocess import from_minimization, to_minimization
from src.core.solution import Direction, Solution, SolutionSet, set_dominates


eval_log = logging.getLogger('evaluation')


class Statistic(str, Enum):
    """Descriptive statistic of objective values."""
    MEAN = 'mean'
    MEDIAN = 'median'
    BEST = 'best'
    WORST = 'worst'


class Winner(str, Enum):
    """Per-objective outcome of a descriptive comparison."""
    FIRST = 'first'
    SECOND = 'second'
    TIE = 'tie'


@dataclass(frozen=True)
class RunCollection:
    """
    Repeated runs of one algorithm.

    Attributes:
        algorithm: Algorithm name.
        runs: One solution set per run.
    """
    algorithm: str
    runs: Tuple[SolutionSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'runs', tuple(self.runs))
        if not self.runs:
            raise EmptySetError(f"Algorithm '{self.algorithm}' has no runs")
        m = self.runs[0].m
        if any(run.m != m for run in self.runs):
            raise DimensionMismatchError(f"Runs of '{self.algorithm}' disagree on the number of objectives")

    @property
    def meta(self):
        return self.runs[0].meta


@dataclass(frozen=True)
class ObjectiveStats:
    """
    Per-objective statistics of one set, in natural units.

    Attributes:
        names: Objective names.
        directions: Objective directions.
        mean: Mean per objective.
        median: Median per objective.
        best: Best value per objective.
        worst: Worst value per objective.
    """
    names: Tuple[str, ...]
    directions: Tuple[Direction, ...]
    mean: Tuple[float, ...]
    median: Tuple[float, ...]
    best: Tuple[float, ...]
    worst: Tuple[float, ...]

    def get(self, statistic: Statistic) -> Tuple[float, ...]:
        return getattr(self, Statistic(statistic).value)

    def to_dict(self) -> Dict[str, Dict[str, float]]:
        return {
            name: {stat.value: self.get(stat)[i] for stat in Statistic}
            for i, name in enumerate(self.names)
        }


def per_objective_stats(A: SolutionSet) -> ObjectiveStats:
    """
    Mean, median, best and worst of every objective.

    Args:
        A: Nonempty set in either orientation.

    Returns:
        ObjectiveStats: Statistics in the objectives' natural units.
    """
    if not len(A):
        raise EmptySetError(f"Statistics are undefined for empty set '{A.name}'")
    natural = from_minimization(A)
    X = natural.as_array()
    maximize = np.array([m.direction is Direction.MAXIMIZE for m in natural.meta])
    best = np.where(maximize, X.max(axis=0), X.min(axis=0))
    worst = np.where(maximize, X.min(axis=0), X.max(axis=0))
    return ObjectiveStats(
        names=tuple(natural.names),
        directions=tuple(m.direction for m in natural.meta),
        mean=tuple(X.mean(axis=0).tolist()),
        median=tuple(np.median(X, axis=0).tolist()),
        best=tuple(best.tolist()),
        worst=tuple(worst.tolist()),
    )


@dataclass(frozen=True)
class DoeComparison:
    """
    Outcome of comparing two sets by a descriptive statistic.

    Attributes:
        statistic: Statistic used.
        winners: Winner per objective.
        first: Statistic values of the first set.
        second: Statistic values of the second set.
        misleading: The verdict contradicts set dominance between the two sets.
    """
    statistic: Statistic
    winners: Tuple[Winner, ...]
    first: Tuple[float, ...]
    second: Tuple[float, ...]
    misleading: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            'statistic': self.statistic.value,
            'winners': [w.value for w in self.winners],
            'first': list(self.first),
            'second': list(self.second),
            'misleading': self.misleading,
        }


def doe_compare(A: SolutionSet, B: SolutionSet, stat: Statistic) -> DoeComparison:
    """
    Compare two sets objective by objective with a descriptive statistic.

    Args:
        A: First set.
        B: Second set.
        stat: Statistic to compare.

    Returns:
        DoeComparison: Winners per objective and whether set dominance disagrees.
    """
    if A.m != B.m:
        raise DimensionMismatchError(f"Sets '{A.name}' and '{B.name}' have {A.m} and {B.m} objectives")
    stat = Statistic(stat)
    stats_a, stats_b = per_objective_stats(A), per_objective_stats(B)
    winners = []
    for a, b, direction in zip(stats_a.get(stat), stats_b.get(stat), stats_a.directions):
        if a == b:
            winners.append(Winner.TIE)
        elif (a < b) == (direction is Direction.MINIMIZE):
            winners.append(Winner.FIRST)
        else:
            winners.append(Winner.SECOND)

    min_a, min_b = to_minimization(A), to_minimization(B)
    misleading = (
        (set_dominates(min_a, min_b) and Winner.SECOND in winners)
        or (set_dominates(min_b, min_a) and Winner.FIRST in winners)
    )
    if misleading:
        eval_log.warning(
            f"{stat.value} comparison of '{A.name}' and '{B.name}' contradicts set dominance"
        )
    return DoeComparison(stat, tuple(winners), stats_a.get(stat), stats_b.get(stat), misleading)


def scalarize_best(A: SolutionSet, weights: Sequence[float]) -> Tuple[Solution, float]:
    """
    Fittest solution by weighted sum.

    Args:
        A: Normalized set in minimization orientation.
        weights: Nonnegative weights summing to 1, one per objective.

    Returns:
        tuple: (solution with the smallest weighted sum, its score); ties go to the first.
    """
    if not len(A):
        raise EmptySetError(f"Cannot scalarize empty set '{A.name}'")
    w = np.asarray(weights, dtype=float)
    if w.shape != (A.m,):
        raise DimensionMismatchError(f"Expected {A.m} weights, got {w.size}")
    if np.any(w < 0) or abs(w.sum() - 1.0) > WEIGHT_TOLERANCE:
        raise InconsistentPreferencesError(f"Weights must be nonnegative and sum to 1, got {w.tolist()}")
    scores = A.as_array() @ w
    index = int(np.argmin(scores))
    return A.solutions[index], float(scores[index])


def median_index(values: Sequence[float]) -> int:
    """
    Index of the value nearest the median.

    An even count takes the lower-middle value as the median, so a real run is
    always selected. Ties go to the lowest index.

    Args:
        values: One value per run.

    Returns:
        int: Selected index.
    """
    if not len(values):
        raise EmptySetError("Cannot select a run among no values")
    ordered = sorted(values)
    median = ordered[(len(ordered) - 1) // 2]
    distances = [abs(v - median) for v in values]
    return distances.index(min(distances))


def select_representative_run(
    rc: RunCollection,
    indicator: str,
    config: IndicatorConfig,
    reference: Optional[ReferenceData] = None,
) -> int:
    """
    Run whose indicator value is closest to the median over all runs.

    Empty runs have nothing to evaluate and are never selected, unless every run is empty.

    Args:
        rc: Runs of one algorithm, preprocessed.
        indicator: A unary-evaluable indicator, e.g. HV.
        config: Indicator configuration.
        reference: Shared reference data; built from the runs if omitted.

    Returns:
        int: Index of the representative run.
    """
    name = canonical_name(indicator)
    if is_binary(name) and name != 'EPS':
        raise IndicatorArityError(f"{name} is not unary; choose e.g. HV to select a run")
    candidates = [i for i, run in enumerate(rc.runs) if len(run)]
    if len(candidates) <= 1:
        return candidates[0] if candidates else 0
    if reference is None:
        reference = build_reference_data([rc.runs[i] for i in candidates], config)
    values: List[float] = [evaluate(name, rc.runs[i], reference, config).value for i in candidates]
    return candidates[median_index(values)]
