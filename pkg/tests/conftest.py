"""Shared fixtures for the evaluation test suite."""
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict, Generator, Iterable, Mapping, Optional, Sequence, Tuple

import pytest

from src.core.solution import Direction, SolutionSet

if TYPE_CHECKING:
    from pytest_mock.plugin import MockerFixture


def make_set(
    name: str, points: Iterable[Sequence[float]], directions: Optional[Sequence[Direction]] = None
) -> SolutionSet:
    """Build a set over objectives f1..fm from raw points."""
    points = [tuple(float(v) for v in p) for p in points]
    m = len(points[0]) if points else 2
    names = [f"f{i + 1}" for i in range(m)]
    return SolutionSet.from_points(name, points, names=names, directions=directions)


@pytest.fixture
def knee_sets() -> Dict[str, SolutionSet]:
    """Two knee points against three well-spread non-knee points of the same front."""
    return {
        'A': make_set('A', [(2, 6), (9, 2)]),
        'B': make_set('B', [(1, 10), (7, 5), (12, 1.5)]),
    }


@pytest.fixture
def capacity_sets() -> Dict[str, SolutionSet]:
    """Cost (minimized) against supported users (maximized)."""
    directions = [Direction.MINIMIZE, Direction.MAXIMIZE]
    A = SolutionSet.from_points(
        'A', [(750, 2000), (1500, 2500), (1750, 3000)], names=['cost', 'users'], directions=directions
    )
    B = SolutionSet.from_points(
        'B', [(500, 1000), (1250, 2500), (2000, 4000)], names=['cost', 'users'], directions=directions
    )
    return {'A': A, 'B': B}


@pytest.fixture
def coverage_sets() -> Dict[str, SolutionSet]:
    """Test-suite cost (minimized) against coverage (maximized)."""
    directions = [Direction.MINIMIZE, Direction.MAXIMIZE]
    A = SolutionSet.from_points(
        'A', [(200, 0.2), (350, 0.4), (400, 0.6), (450, 1.0)],
        names=['cost', 'coverage'], directions=directions,
    )
    B = SolutionSet.from_points(
        'B', [(0, 0), (100, 0.4), (200, 0.7), (350, 0.9), (500, 1.0)],
        names=['cost', 'coverage'], directions=directions,
    )
    return {'A': A, 'B': B}


@pytest.fixture(autouse=True)
def isolated_logging(tmp_path: Path, mocker: "MockerFixture") -> Generator[None, None, None]:
    """Keep the evaluation logger out of the repository and let caplog see it."""
    logger = logging.getLogger('evaluation')
    handlers = list(logger.handlers)
    propagate = logger.propagate
    from src.utils.logger import setup_logger

    mocker.patch('src.main.setup_logger', side_effect=lambda: _restoring(setup_logger(tmp_path / 'evaluation.log')))
    yield
    for handler in list(logger.handlers):
        if handler not in handlers:
            logger.removeHandler(handler)
            handler.close()
    logger.propagate = propagate


def _restoring(loggers: Tuple[logging.Logger, logging.Logger]) -> Tuple[logging.Logger, logging.Logger]:
    # caplog listens on the root logger
    loggers[0].propagate = True
    return loggers


@pytest.fixture
def write_manifest(tmp_path: Path) -> Callable[..., Path]:
    """Write CSV runs and a manifest into tmp_path and return the manifest path."""

    def _write(
        runs: Mapping[str, Sequence[Sequence[Sequence[float]]]],
        objectives: Sequence[Mapping[str, Any]] = ({'name': 'f1'}, {'name': 'f2'}),
        **fields: Any,
    ) -> Path:
        names = [o['name'] for o in objectives]
        algorithms = []
        for algorithm, algorithm_runs in runs.items():
            paths = []
            for index, points in enumerate(algorithm_runs):
                path = tmp_path / f"{algorithm}_{index}.csv"
                lines = [','.join(names)] + [','.join(repr(float(v)) for v in p) for p in points]
                path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
                paths.append(path.name)
            algorithms.append({'name': algorithm, 'runs': paths})
        manifest = {'objectives': list(objectives), 'algorithms': algorithms, **fields}
        path = tmp_path / 'manifest.json'
        path.write_text(json.dumps(manifest), encoding='utf-8')
        return path

    return _write
