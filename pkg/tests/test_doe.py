"""Tests for descriptive statistics and representative-run selection."""
from typing import Dict

import pytest

from src.core.doe import (
    RunCollection,
    Statistic,
    Winner,
    doe_compare,
    median_index,
    per_objective_stats,
    scalarize_best,
    select_representative_run,
)
from src.core.errors import EmptySetError, IndicatorArityError, InconsistentPreferencesError
from src.core.indicators import IndicatorConfig
from src.core.preprocess import to_minimization
from src.core.solution import Direction, SolutionSet
from tests.conftest import make_set


def test_stats_are_reported_in_natural_units(capacity_sets: Dict[str, SolutionSet]) -> None:
    stats = per_objective_stats(to_minimization(capacity_sets['A']))
    assert stats.names == ('cost', 'users')
    assert stats.directions == (Direction.MINIMIZE, Direction.MAXIMIZE)
    assert stats.mean == pytest.approx((4000 / 3, 7500 / 3))
    assert stats.median == (1500.0, 2500.0)
    assert stats.best == (750.0, 3000.0)
    assert stats.worst == (1750.0, 2000.0)
    assert stats.to_dict()['users']['best'] == 3000.0


def test_stats_of_an_empty_set() -> None:
    with pytest.raises(EmptySetError):
        per_objective_stats(make_set('E', []))


def test_mean_comparison_can_contradict_set_dominance() -> None:
    """A set-dominates B, yet B has the better mean on every objective."""
    A = make_set('A', [(1, 1), (9, 9)])
    B = make_set('B', [(3, 5), (5, 3)])
    result = doe_compare(A, B, Statistic.MEAN)
    assert result.winners == (Winner.SECOND, Winner.SECOND)
    assert result.misleading
    assert result.to_dict()['misleading'] is True

    best = doe_compare(A, B, Statistic.BEST)
    assert best.winners == (Winner.FIRST, Winner.FIRST)
    assert not best.misleading


def test_comparison_respects_directions(capacity_sets: Dict[str, SolutionSet]) -> None:
    result = doe_compare(capacity_sets['A'], capacity_sets['B'], Statistic.BEST)
    assert result.first == (750.0, 3000.0)
    assert result.second == (500.0, 4000.0)
    assert result.winners == (Winner.SECOND, Winner.SECOND)
    assert not result.misleading


def test_comparison_reports_ties() -> None:
    A = make_set('A', [(1, 2)])
    B = make_set('B', [(1, 3)])
    result = doe_compare(A, B, 'median')
    assert result.winners == (Winner.TIE, Winner.FIRST)
    assert not result.misleading


@pytest.mark.parametrize(
    "values, expected",
    [
        ([3.0, 1.0, 2.0], 2),
        ([1.0, 2.0, 3.0, 4.0], 1),
        ([5.0, 5.0], 0),
        ([7.0], 0),
    ],
)
def test_median_index(values, expected) -> None:
    assert median_index(values) == expected


def test_median_index_of_nothing() -> None:
    with pytest.raises(EmptySetError):
        median_index([])


def test_representative_run_by_hypervolume() -> None:
    rc = RunCollection('nsga', [make_set(f'run{i}', [(i, i)]) for i in (1, 2, 3)])
    config = IndicatorConfig(normalization='none').with_overrides({'ref_point': [4, 4]})
    assert select_representative_run(rc, 'HV', config) == 1


def test_empty_runs_are_never_representative() -> None:
    rc = RunCollection('nsga', [make_set('r0', [])] + [make_set(f'r{i}', [(i, i)]) for i in (1, 2, 3)])
    config = IndicatorConfig(normalization='none').with_overrides({'ref_point': [4, 4]})
    assert select_representative_run(rc, 'HV', config) == 2
    assert select_representative_run(RunCollection('nsga', [make_set('r0', [])]), 'HV', config) == 0


def test_representative_run_needs_a_unary_indicator() -> None:
    rc = RunCollection('nsga', [make_set('r0', [(1, 1)]), make_set('r1', [(2, 2)])])
    with pytest.raises(IndicatorArityError):
        select_representative_run(rc, 'CI', IndicatorConfig())


def test_run_collection_needs_runs() -> None:
    with pytest.raises(EmptySetError):
        RunCollection('nsga', [])


def test_scalarize_best() -> None:
    A = make_set('A', [(0, 1), (1, 0), (0.4, 0.4)])
    solution, score = scalarize_best(A, [0.5, 0.5])
    assert solution.objectives == (0.4, 0.4)
    assert score == pytest.approx(0.4)


def test_scalarize_ties_go_to_the_first_solution() -> None:
    A = make_set('A', [(0, 1), (1, 0)])
    solution, _ = scalarize_best(A, [0.5, 0.5])
    assert solution.objectives == (0.0, 1.0)


def test_scalarize_rejects_bad_weights() -> None:
    A = make_set('A', [(0, 1)])
    with pytest.raises(InconsistentPreferencesError):
        scalarize_best(A, [0.7, 0.7])
