"""Randomized checks of hypervolume exactness and Pareto compliance."""
import json
from pathlib import Path
from typing import Optional, Tuple

import numpy as np
import pytest
from scipy.stats import qmc

from src.core.indicators import (
    contribution,
    coverage,
    epsilon_additive,
    gd,
    gd_plus,
    hypervolume,
    igd_plus,
    unfr,
)
from src.core.solution import SolutionSet, set_dominates, set_weakly_dominates
from tests.conftest import make_set


def _grid_volume(points: np.ndarray, ref: Tuple[int, ...]) -> int:
    """Unit cells of the integer grid below ref dominated by some point."""
    m = len(ref)
    axes = [np.arange(r) for r in ref]
    cells = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, m)
    covered = (points[None, :, :] <= cells[:, None, :]).all(axis=2).any(axis=1)
    return int(np.count_nonzero(covered))


def _front(rng: np.random.Generator, m: int, n: int, scale: float = 1.0) -> np.ndarray:
    """n mutually nondominated points on the plane where the objectives sum to scale."""
    return scale * rng.dirichlet(np.ones(m), size=n)


def _dominated_pair(
    rng: np.random.Generator, kind: Optional[str] = None, m: Optional[int] = None
) -> Tuple[SolutionSet, SolutionSet, str]:
    """
    A nondominated set A and a set B that A weakly dominates.

    Kinds: 'subset' takes rows of A, 'shared' copies random members of A and
    shifts about half of them, 'weak' shifts every member on some objectives
    only, 'strict' shifts every member on every objective. 'weak' and 'strict'
    keep B paired row by row with A.
    """
    kind = kind or str(rng.choice(['subset', 'shared', 'weak', 'strict']))
    m = m or int(rng.integers(2, 5))
    X = _front(rng, m, int(rng.integers(1, 21)))
    if kind == 'subset':
        Y = X[np.sort(rng.choice(len(X), size=int(rng.integers(1, len(X) + 1)), replace=False))]
    elif kind == 'shared':
        Y = X[rng.integers(0, len(X), size=int(rng.integers(1, 21)))]
        moved = rng.random(len(Y)) < 0.5
        Y = Y + moved[:, None] * rng.uniform(0.01, 0.3, size=Y.shape)
    elif kind == 'weak':
        Y = X + (rng.random(X.shape) < 0.5) * rng.uniform(0.01, 0.3, size=X.shape)
    else:
        Y = X + rng.uniform(0.01, 0.3, size=X.shape)
    return make_set('A', X.tolist()), make_set('B', Y.tolist()), kind


def test_hypervolume_matches_grid_counting() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(100):
        m = int(rng.integers(2, 5))
        points = rng.integers(0, 6, size=(int(rng.integers(1, 9)), m))
        ref = (6,) * m
        A = make_set('A', points.tolist())
        assert hypervolume(A, ref) == pytest.approx(_grid_volume(points, ref))


@pytest.mark.parametrize("seed", range(100))
def test_hypervolume_matches_quasi_monte_carlo(seed: int) -> None:
    """Estimate the dominated volume with 2^20 points of a scrambled Sobol sequence."""
    rng = np.random.default_rng(seed)
    m = int(rng.integers(2, 5))
    points = rng.random((int(rng.integers(5, 11)), m))
    ref = np.full(m, 1.1)
    lower = points.min(axis=0)

    sampler = qmc.Sobol(d=m, scramble=True, seed=seed)
    samples = lower + sampler.random_base2(20) * (ref - lower)
    covered = np.zeros(len(samples), dtype=bool)
    for point in points:
        covered |= (point <= samples).all(axis=1)
    estimate = covered.mean() * float(np.prod(ref - lower))

    assert hypervolume(make_set('A', points.tolist()), ref) == pytest.approx(estimate, rel=0.01)


def test_hypervolume_never_decreases_when_adding_points() -> None:
    rng = np.random.default_rng(11)
    for _ in range(50):
        points = rng.random((6, 3))
        ref = (1.0, 1.0, 1.0)
        values = [hypervolume(make_set('A', points[:k].tolist()), ref) for k in range(1, 7)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_compliant_indicators_agree_with_set_dominance() -> None:
    """Every Pareto-compliant indicator rates a weakly dominating set at least as well."""
    rng = np.random.default_rng(7)
    for _ in range(400):
        A, B, kind = _dominated_pair(rng)
        assert set_weakly_dominates(A, B)
        R = make_set('R', _front(rng, A.m, int(rng.integers(1, 11)), scale=0.8).tolist())
        ref = np.vstack([A.as_array(), B.as_array()]).max(axis=0) + 1

        assert hypervolume(A, ref) >= hypervolume(B, ref) - 1e-12
        assert igd_plus(A, R) <= igd_plus(B, R) + 1e-12
        assert epsilon_additive(A, B) <= 0
        assert coverage(A, B) == 1.0
        assert unfr(A, [A, B]) >= unfr(B, [A, B])
        assert contribution(A, B) >= contribution(B, A)
        if kind in ('weak', 'strict'):
            # paired rows: each d+ can only grow
            assert gd_plus(A, R) <= gd_plus(B, R) + 1e-12
        if kind == 'strict':
            assert set_dominates(A, B)
            assert epsilon_additive(B, A) > 0


def _gd_witness(rng: np.random.Generator) -> Optional[dict]:
    for _ in range(20000):
        A, B, _ = _dominated_pair(rng, kind='strict', m=2)
        R = make_set('R', _front(rng, 2, int(rng.integers(1, 4)), scale=0.5).tolist())
        if gd(A, R, p=2) > gd(B, R, p=2):
            return {
                'A': [list(s.objectives) for s in A],
                'B': [list(s.objectives) for s in B],
                'R': [list(s.objectives) for s in R],
                'gd': [gd(A, R, p=2), gd(B, R, p=2)],
                'gd_plus': [gd_plus(A, R), gd_plus(B, R)],
            }
    return None


def test_gd_is_not_pareto_compliant(tmp_path: Path) -> None:
    witness = _gd_witness(np.random.default_rng(3))
    assert witness is not None

    path = tmp_path / 'gd_witness.json'
    path.write_text(json.dumps(witness, indent=2), encoding='utf-8')
    archived = json.loads(path.read_text(encoding='utf-8'))

    A, B, R = (make_set(name, archived[name]) for name in ('A', 'B', 'R'))
    assert set_dominates(A, B)
    assert gd(A, R, p=2) == pytest.approx(archived['gd'][0])
    assert archived['gd'][0] > archived['gd'][1]
    assert archived['gd_plus'][0] <= archived['gd_plus'][1]
